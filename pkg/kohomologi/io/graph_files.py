# io/graph_files.py
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..logic.complexes import Graph, GraphError, format_vertex
from .schemas import COMMENT_PREFIX, GRAPH_FILE_SCHEMA


class GraphParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"rad {line_no}: {message}")
        self.line_no = line_no
        self.message = message


def _directive(token: str) -> Optional[str]:
    t = token.strip().lower()
    for key, aliases in GRAPH_FILE_SCHEMA.items():
        if t in aliases:
            return key
    return None


def _records(text: str) -> List[Tuple[int, str, List[str]]]:
    out = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        cut = next((i for i, t in enumerate(tokens) if t.startswith(COMMENT_PREFIX)), len(tokens))
        tokens = tokens[:cut]
        if not tokens:
            continue
        head, *args = tokens
        kind = _directive(head)
        if kind is None:
            raise GraphParseError(line_no, f"okänt nyckelord {head!r} (väntade 'v NAMN' eller 'e NAMN NAMN')")
        want = 1 if kind == "vertex" else 2
        if len(args) != want:
            raise GraphParseError(line_no, f"'{head}' tar {want} namn, fick {len(args)}")
        for name in args:
            if COMMENT_PREFIX in name:
                raise GraphParseError(line_no, f"namnet {name!r} innehåller {COMMENT_PREFIX!r}")
        out.append((line_no, kind, args))
    return out


def parse_graph(text: str) -> Graph:
    """Radorienterat format: 'v NAMN' deklarerar ett hörn, 'e NAMN NAMN' en kant.

    Utan 'v'-rader deklarerar kanterna sina ändpunkter i förekomstordning;
    finns någon 'v'-rad måste varje ändpunkt vara deklarerad.
    """
    records = _records(text)
    declared = any(kind == "vertex" for _, kind, _ in records)

    vertices: Dict[str, int] = {}
    for line_no, kind, args in records:
        if kind != "vertex":
            continue
        name = args[0]
        if name in vertices:
            raise GraphParseError(line_no, f"hörnet {name!r} är redan deklarerat (rad {vertices[name]})")
        vertices[name] = line_no

    edges = []
    seen: Dict[frozenset, int] = {}
    for line_no, kind, args in records:
        if kind != "edge":
            continue
        a, b = args
        if a == b:
            raise GraphParseError(line_no, f"ögla vid {a!r}")
        for v in (a, b):
            if v not in vertices:
                if declared:
                    raise GraphParseError(line_no, f"kanten refererar odeklarerat hörn {v!r}")
                vertices[v] = line_no
        key = frozenset((a, b))
        if key in seen:
            raise GraphParseError(line_no, f"kanten {a}–{b} finns redan (rad {seen[key]})")
        seen[key] = line_no
        edges.append((a, b))
    return Graph.build(vertices, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"v {format_vertex(v)}" for v in g.vertices]
    lines += [f"e {format_vertex(a)} {format_vertex(b)}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
    with open(path, encoding="utf-8-sig") as fh:
        return parse_graph(fh.read())

# logic/complexes.py
"""Grafer, flaggkomplex och simpliciala operatorer (länk, stjärna, fulla delkomplex, speglar).

Ett komplex lagras som hela mängden av slutna simplex, inklusive det tomma simplexet.
Hörnordningen är deklarationsordningen; alla simplex sorteras efter den.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

Vertex = Hashable
Simplex = Tuple[Vertex, ...]
Face = FrozenSet[Vertex]

EMPTY_SIMPLEX: Simplex = ()
_EMPTY_FACE: Face = frozenset()


class GraphError(ValueError):
    """Ogiltig graf (ögla, odeklarerat hörn, dubblerat hörn)."""


class SimplexError(ValueError):
    """Simplex eller hörn finns inte i komplexet."""


# ---------------------------
# Graf
# ---------------------------

@dataclass(frozen=True)
class Graph:
    vertices: Tuple[Vertex, ...]
    edges: FrozenSet[Tuple[Vertex, Vertex]]

    def __post_init__(self) -> None:
        pos: Dict[Vertex, int] = {}
        for i, v in enumerate(self.vertices):
            if v in pos:
                raise GraphError(f"Dubblerat hörn: {v!r}")
            pos[v] = i
        for e in self.edges:
            a, b = e
            if a == b:
                raise GraphError(f"Ögla vid {a!r}")
            if a not in pos or b not in pos:
                raise GraphError(f"Kant {a!r}–{b!r} refererar odeklarerat hörn")
            if pos[a] > pos[b]:
                raise GraphError(f"Kant {a!r}–{b!r} är inte normaliserad")

    @classmethod
    def build(cls, vertices: Iterable[Vertex], edges: Iterable[Tuple[Vertex, Vertex]]) -> "Graph":
        vs = tuple(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        norm = set()
        for a, b in edges:
            if a in pos and b in pos and pos[a] > pos[b]:
                a, b = b, a
            norm.add((a, b))
        return cls(vs, frozenset(norm))

    @cached_property
    def index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def sorted_edges(self) -> List[Tuple[Vertex, Vertex]]:
        return sorted(self.edges, key=lambda e: (self.index[e[0]], self.index[e[1]]))

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.sorted_edges())
        return G


# ---------------------------
# Simplicialt komplex
# ---------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    vertex_order: Tuple[Vertex, ...]
    faces: FrozenSet[Face]

    def __post_init__(self) -> None:
        if _EMPTY_FACE not in self.faces:
            raise SimplexError("Det tomma simplexet saknas")
        present = {v for f in self.faces for v in f}
        if len(set(self.vertex_order)) != len(self.vertex_order) or present != set(self.vertex_order):
            raise SimplexError("Hörnordningen stämmer inte med komplexets hörn")
        for f in self.faces:
            if len(f) > 1:
                for v in f:
                    if f - {v} not in self.faces:
                        raise SimplexError(f"Komplexet är inte slutet under sidor: {sorted(map(str, f))}")

    # -------- konstruktion --------
    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[Vertex]],
                       vertex_order: Optional[Sequence[Vertex]] = None) -> "SimplicialComplex":
        """Stäng given simplexlista under sidor; ordningen ärvs eller tas i förekomstordning."""
        faces = {_EMPTY_FACE}
        seen: Dict[Vertex, None] = {}
        for s in simplices:
            verts = tuple(s)
            for v in verts:
                seen.setdefault(v, None)
            top = frozenset(verts)
            if top in faces:
                continue
            for size in range(1, len(verts) + 1):
                for sub in combinations(verts, size):
                    faces.add(frozenset(sub))
        order = tuple(v for v in vertex_order if v in seen) if vertex_order is not None else tuple(seen)
        return cls(order, frozenset(faces))

    # -------- uppslag --------
    @cached_property
    def index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertex_order)}

    def sort_key(self, face: Iterable[Vertex]) -> Tuple[int, Tuple[int, ...]]:
        idx = sorted(self.index[v] for v in face)
        return (len(idx), tuple(idx))

    def canonical(self, verts: Iterable[Vertex]) -> Simplex:
        verts = tuple(verts)
        unknown = [v for v in verts if v not in self.index]
        if unknown:
            raise SimplexError(f"Okänt hörn: {unknown[0]!r}")
        return tuple(sorted(set(verts), key=self.index.__getitem__))

    def __contains__(self, verts: object) -> bool:
        try:
            return frozenset(verts) in self.faces  # type: ignore[arg-type]
        except TypeError:
            return False

    @cached_property
    def _ordered(self) -> Tuple[Simplex, ...]:
        ordered = sorted(self.faces, key=self.sort_key)
        return tuple(tuple(sorted(f, key=self.index.__getitem__)) for f in ordered)

    def simplices(self) -> List[Simplex]:
        return list(self._ordered)

    @cached_property
    def by_dimension(self) -> Dict[int, Tuple[Simplex, ...]]:
        out: Dict[int, List[Simplex]] = {}
        for s in self._ordered:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: tuple(v) for d, v in out.items()}

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    @property
    def is_empty(self) -> bool:
        return not self.vertex_order

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.by_dimension.get(d, ())) for d in range(self.dimension + 1))

    def facets(self) -> List[Simplex]:
        maximal = [f for f in self.faces
                   if not any(f | {v} in self.faces for v in self.vertex_order if v not in f)]
        return [tuple(sorted(f, key=self.index.__getitem__)) for f in sorted(maximal, key=self.sort_key)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex((), frozenset({_EMPTY_FACE}))


def _restricted(k: SimplicialComplex, faces: Iterable[Face]) -> SimplicialComplex:
    faces = frozenset(faces) | {_EMPTY_FACE}
    present = {v for f in faces for v in f}
    return SimplicialComplex(tuple(v for v in k.vertex_order if v in present), faces)


def _require_simplex(k: SimplicialComplex, s: Iterable[Vertex]) -> Face:
    face = frozenset(k.canonical(s))
    if face not in k.faces:
        raise SimplexError(f"{format_simplex(tuple(s))} är inget simplex i komplexet")
    return face


def _require_vertices(k: SimplicialComplex, vs: Iterable[Vertex]) -> FrozenSet[Vertex]:
    vs = frozenset(vs)
    unknown = [v for v in vs if v not in k.index]
    if unknown:
        raise SimplexError(f"Okänt hörn: {unknown[0]!r}")
    return vs


# ---------------------------
# Operationer
# ---------------------------

def flag_complex(g: Graph) -> SimplicialComplex:
    """Flaggkomplexet: simplexen är exakt klickarna i g (inklusive ∅ och hörnen)."""
    cliques = nx.enumerate_all_cliques(g.to_networkx())
    faces = {_EMPTY_FACE} | {frozenset(c) for c in cliques}
    return SimplicialComplex(tuple(g.vertices), frozenset(faces))


def simplices(k: SimplicialComplex) -> List[Simplex]:
    return k.simplices()


def link(k: SimplicialComplex, s: Iterable[Vertex]) -> SimplicialComplex:
    face = _require_simplex(k, s)
    return _restricted(k, (t for t in k.faces if not (t & face) and (t | face) in k.faces))


def star(k: SimplicialComplex, s: Iterable[Vertex]) -> SimplicialComplex:
    """Sluten stjärna: alla t med t ∪ s ∈ k."""
    face = _require_simplex(k, s)
    return _restricted(k, (t for t in k.faces if (t | face) in k.faces))


def full_subcomplex(k: SimplicialComplex, vs: Iterable[Vertex]) -> SimplicialComplex:
    keep = _require_vertices(k, vs)
    return _restricted(k, (t for t in k.faces if t <= keep))


def deleted_complex(k: SimplicialComplex, v: Vertex) -> SimplicialComplex:
    """Γ̂_v: det fulla delkomplexet på V − {v}."""
    _require_vertices(k, (v,))
    return full_subcomplex(k, (u for u in k.vertex_order if u != v))


def mirror_union(k: SimplicialComplex, vs: Iterable[Vertex]) -> SimplicialComplex:
    """Unionen av Γ̂_v över v ∈ vs; tom mängd ger det tomma komplexet."""
    vs = _require_vertices(k, vs)
    faces = set()
    for v in sorted(vs, key=k.index.__getitem__):
        faces |= deleted_complex(k, v).faces
    return _restricted(k, faces)


DOUBLE_CROSS_RULES = ("adjacent", "distinct")


def double_graph(g: Graph, cross: str = "adjacent") -> Graph:
    """Γ′ på V × {+1, −1}: samma tecken följer E(g).

    cross="adjacent": motsatta tecken förbinds när {v, w} ∈ E(g); flaggkomplexet är då
    de teckensatta klickerna, dvs L_Γ. cross="distinct": motsatta tecken förbinder alla v ≠ w.
    """
    if cross not in DOUBLE_CROSS_RULES:
        raise GraphError(f"Okänd korsregel {cross!r} (välj bland {', '.join(DOUBLE_CROSS_RULES)})")
    plus = [(v, 1) for v in g.vertices]
    minus = [(v, -1) for v in g.vertices]
    edges = []
    for a, b in g.sorted_edges():
        edges.append(((a, 1), (b, 1)))
        edges.append(((a, -1), (b, -1)))
    cross_pairs = g.sorted_edges() if cross == "adjacent" else combinations(g.vertices, 2)
    for a, b in cross_pairs:
        edges.append(((a, 1), (b, -1)))
        edges.append(((a, -1), (b, 1)))
    return Graph.build(plus + minus, edges)


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Hörn = icketomma simplex i k, simplex = kedjor under sidinklusion."""
    nonempty = [s for s in k.simplices() if s]
    chains_to: Dict[Simplex, List[Tuple[Simplex, ...]]] = {}
    faces = {_EMPTY_FACE}
    for s in nonempty:
        own: List[Tuple[Simplex, ...]] = [(s,)]
        for size in range(1, len(s)):
            for sub in combinations(s, size):
                own.extend(c + (s,) for c in chains_to[sub])
        chains_to[s] = own
        faces.update(frozenset(c) for c in own)
    return SimplicialComplex(tuple(nonempty), frozenset(faces))


def one_skeleton(k: SimplicialComplex) -> Graph:
    edges = [tuple(s) for s in k.by_dimension.get(1, ())]
    return Graph.build(k.vertex_order, edges)  # type: ignore[arg-type]


def is_flag(k: SimplicialComplex) -> bool:
    g = one_skeleton(k).to_networkx()
    return all(frozenset(c) in k.faces for c in nx.enumerate_all_cliques(g))


def is_single_simplex(k: SimplicialComplex) -> bool:
    # ∅ räknas som ett simplex: det tomma komplexet är enkelt
    return frozenset(k.vertex_order) in k.faces


# ---------------------------
# Formatering
# ---------------------------

def format_vertex(v: Vertex) -> str:
    if isinstance(v, tuple) and len(v) == 2 and v[1] in (1, -1):
        return f"{format_vertex(v[0])}{'+' if v[1] == 1 else '-'}"
    if isinstance(v, tuple):
        return "(" + ",".join(format_vertex(x) for x in v) + ")"
    return str(v)


def format_simplex(s: Sequence[Vertex]) -> str:
    if not s:
        return "∅"
    return "{" + ",".join(format_vertex(v) for v in s) + "}"

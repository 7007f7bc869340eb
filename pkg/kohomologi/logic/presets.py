# logic/presets.py
from __future__ import annotations

from itertools import combinations
from typing import Optional

from ..config.constants import PRESET_NAMES
from .complexes import Graph, SimplicialComplex, barycentric_subdivision, one_skeleton

# 6-hörnstrianguleringen av det reella projektiva planet (varje kant i exakt två trianglar, χ = 1)
RP2_FACETS = (
    (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
)


class PresetError(ValueError):
    """Okänd preset eller ogiltigt n."""


def _names(n: int) -> list[str]:
    return [f"a{i}" for i in range(1, n + 1)]


def _rp2_graph() -> Graph:
    # Barycentrisk indelning är flagg, så 1-skelettets flaggkomplex är indelningen själv
    rp2 = SimplicialComplex.from_simplices(RP2_FACETS, vertex_order=range(1, 7))
    sd = one_skeleton(barycentric_subdivision(rp2))
    prefix = {1: "v", 2: "e", 3: "f"}
    rename = {s: prefix[len(s)] + "".join(str(x) for x in s) for s in sd.vertices}
    return Graph.build((rename[s] for s in sd.vertices), ((rename[a], rename[b]) for a, b in sd.sorted_edges()))


def preset_graph(name: str, n: Optional[int] = None) -> Graph:
    name = (name or "").strip().lower()
    if name not in PRESET_NAMES:
        raise PresetError(f"Okänd preset '{name}'. Välj bland {', '.join(PRESET_NAMES)}.")
    if name == "rp2":
        return _rp2_graph()
    if n is None:
        raise PresetError(f"Preset '{name}' kräver --n")
    if n < 1:
        raise PresetError(f"n måste vara minst 1 (fick {n})")
    vs = _names(n)
    if name == "path":
        return Graph.build(vs, zip(vs, vs[1:]))
    if name == "cycle":
        if n < 3:
            raise PresetError(f"En cykel kräver n ≥ 3 (fick {n})")
        return Graph.build(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])
    if name == "complete":
        return Graph.build(vs, combinations(vs, 2))
    return Graph.build(vs, ())

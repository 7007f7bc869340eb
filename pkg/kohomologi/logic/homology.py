# logic/homology.py
"""Exakt reducerad och relativ simplicial kohomologi över ℤ via Smiths normalform.

Matriserna är glesa med Pythons heltal (godtycklig precision); numpy används bara
för täta vyer (objekt-dtype, så inget spill).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .complexes import EMPTY_SIMPLEX, Simplex, SimplexError, SimplicialComplex

Cohomology = Dict[int, "FinitelyGeneratedAbelianGroup"]


# ---------------------------
# Heltalsmatris
# ---------------------------

@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: Mapping[Tuple[int, int], int] = field(default_factory=dict, hash=False)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "IntegerMatrix":
        data = [list(r) for r in data]
        n_rows = len(data)
        n_cols = len(data[0]) if data else 0
        entries = {(i, j): int(x) for i, r in enumerate(data) for j, x in enumerate(r) if x}
        return cls(n_rows, n_cols, entries)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "IntegerMatrix":
        n_rows, n_cols = arr.shape
        entries = {(i, j): int(arr[i, j]) for i in range(n_rows) for j in range(n_cols) if arr[i, j]}
        return cls(n_rows, n_cols, entries)

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=object)
        for (i, j), x in self.entries.items():
            arr[i, j] = x
        return arr

    def dense(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.to_array()]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self.entries.items()})

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Formerna passar inte: {self.rows}×{self.cols} @ {other.rows}×{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntegerMatrix(self.rows, other.cols, {})
        return IntegerMatrix.from_array(self.to_array().dot(other.to_array()))

    def is_zero(self) -> bool:
        return not any(self.entries.values())


@dataclass(frozen=True)
class SmithForm:
    rank: int
    invariant_factors: Tuple[int, ...]  # d1 | d2 | ... | d_rank, ettor medräknade

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _invariant_chain(diagonal: Iterable[int]) -> Tuple[int, ...]:
    """Gör om en diagonal till delarkedja med parvisa gcd/lcm-byten (gruppen bevaras)."""
    d = sorted(abs(x) for x in diagonal if x)
    for a in range(len(d)):
        for b in range(a + 1, len(d)):
            g = gcd(d[a], d[b])
            d[a], d[b] = g, d[a] * d[b] // g
    return tuple(d)


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Rang och invarianta faktorer; pivot = minsta nollskilda elementet i absolutbelopp."""
    rows: Dict[int, Dict[int, int]] = {}
    cols: Dict[int, set] = {}
    for (i, j), x in sorted(m.entries.items()):
        if x:
            rows.setdefault(i, {})[j] = x
            cols.setdefault(j, set()).add(i)

    def add_row(target: int, source: int, q: int) -> None:
        # rad_target += q * rad_source
        tr = rows[target]
        for c, x in rows[source].items():
            y = tr.get(c, 0) + q * x
            if y:
                tr[c] = y
                cols[c].add(target)
            elif c in tr:
                del tr[c]
                cols[c].discard(target)

    def add_col(target: int, source: int, q: int) -> None:
        # kol_target += q * kol_source
        for r in list(cols[source]):
            rr = rows[r]
            y = rr.get(target, 0) + q * rr[source]
            if y:
                rr[target] = y
                cols.setdefault(target, set()).add(r)
            elif target in rr:
                del rr[target]
                cols[target].discard(r)

    def pick_pivot() -> Optional[Tuple[int, int, int]]:
        best = None
        for i, r in rows.items():
            for j, x in r.items():
                if best is None or abs(x) < abs(best[2]):
                    best = (i, j, x)
                    if abs(x) == 1:
                        return best
        return best

    diagonal: List[int] = []
    while True:
        piv = pick_pivot()
        if piv is None:
            break
        i, j, p = piv
        while True:
            moved = False
            for r in sorted(cols[j] - {i}):
                q = rows[r][j] // p
                if q:
                    add_row(r, i, -q)
                rem = rows[r].get(j, 0)
                if rem:
                    i, p = r, rem
                    moved = True
                    break
            if moved:
                continue
            for c in sorted(set(rows[i]) - {j}):
                q = rows[i][c] // p
                if q:
                    add_col(c, j, -q)
                rem = rows[i].get(c, 0)
                if rem:
                    j, p = c, rem
                    moved = True
                    break
            if not moved:
                break
        diagonal.append(p)
        del rows[i]
        del cols[j]
        for c in list(cols):
            if not cols[c]:
                del cols[c]
        for r in list(rows):
            if not rows[r]:
                del rows[r]
    factors = _invariant_chain(diagonal)
    return SmithForm(len(factors), factors)


# ---------------------------
# Ändligt genererad abelsk grupp
# ---------------------------

@dataclass(frozen=True)
class FinitelyGeneratedAbelianGroup:
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("Negativ fri rang")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"Invarianta faktorer måste vara ≥ 2: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"Invarianta faktorer bildar ingen delarkedja: {self.torsion}")

    @classmethod
    def from_factors(cls, free_rank: int, factors: Iterable[int] = ()) -> "FinitelyGeneratedAbelianGroup":
        return cls(free_rank, tuple(d for d in _invariant_chain(factors) if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "FinitelyGeneratedAbelianGroup") -> "FinitelyGeneratedAbelianGroup":
        return FinitelyGeneratedAbelianGroup.from_factors(self.free_rank + other.free_rank,
                                                          self.torsion + other.torsion)

    def to_json(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: Mapping) -> "FinitelyGeneratedAbelianGroup":
        return cls(int(data["free"]), tuple(int(d) for d in data["torsion"]))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("ℤ")
        elif self.free_rank > 1:
            parts.append(f"ℤ^{self.free_rank}")
        parts.extend(f"ℤ_{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


TRIVIAL = FinitelyGeneratedAbelianGroup()
Z = FinitelyGeneratedAbelianGroup(1)


def direct_sum(*parts: Mapping[int, FinitelyGeneratedAbelianGroup]) -> Cohomology:
    """Gradvis direkt summa; saknade grader räknas som triviala."""
    out: Cohomology = {}
    for part in parts:
        for deg, grp in part.items():
            out[deg] = out.get(deg, TRIVIAL) + grp
    return dict(sorted(out.items()))


def shifted(groups: Mapping[int, FinitelyGeneratedAbelianGroup], shift: int) -> Cohomology:
    return {deg + shift: grp for deg, grp in groups.items()}


def same_groups(a: Mapping[int, FinitelyGeneratedAbelianGroup],
                b: Mapping[int, FinitelyGeneratedAbelianGroup]) -> List[int]:
    """Grader där a och b skiljer sig (tom lista = lika)."""
    return [d for d in sorted(set(a) | set(b)) if a.get(d, TRIVIAL) != b.get(d, TRIVIAL)]


def nonzero(groups: Mapping[int, FinitelyGeneratedAbelianGroup]) -> Cohomology:
    return {d: g for d, g in sorted(groups.items()) if not g.is_trivial}


# ---------------------------
# Kedjekomplex
# ---------------------------

@dataclass(frozen=True)
class AugmentedChainComplex:
    """Bas per grad (−1 håller ∅ när den ingår) och randmatriser ∂_d: C_d → C_{d−1}."""
    bases: Dict[int, Tuple[Simplex, ...]]
    boundaries: Dict[int, IntegerMatrix]

    @property
    def top(self) -> int:
        return max(self.bases) if self.bases else -1

    def rank(self, d: int) -> int:
        return len(self.bases.get(d, ()))

    def check_boundary_squares_zero(self) -> bool:
        for d in range(self.top, 0, -1):
            if d - 1 not in self.boundaries:
                continue
            prod = self.boundaries[d - 1] @ self.boundaries[d]
            if not prod.is_zero():
                return False
        return True


def _chain_complex(k: SimplicialComplex, basis: Iterable[Simplex]) -> AugmentedChainComplex:
    by_dim: Dict[int, List[Simplex]] = {}
    for s in sorted(basis, key=k.sort_key):
        by_dim.setdefault(len(s) - 1, []).append(s)
    top = max(by_dim) if by_dim else -1
    bases = {d: tuple(by_dim.get(d, ())) for d in range(-1, top + 1)}
    position = {d: {s: i for i, s in enumerate(b)} for d, b in bases.items()}
    boundaries: Dict[int, IntegerMatrix] = {}
    for d in range(0, top + 1):
        lower = position.get(d - 1, {})
        entries: Dict[Tuple[int, int], int] = {}
        for j, s in enumerate(bases[d]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                row = lower.get(face)
                if row is not None:
                    entries[(row, j)] = (-1) ** i
        boundaries[d] = IntegerMatrix(len(bases.get(d - 1, ())), len(bases[d]), entries)
    return AugmentedChainComplex(bases, boundaries)


def chain_complex(k: SimplicialComplex) -> AugmentedChainComplex:
    return _chain_complex(k, k.simplices())


def boundary_matrix(k: SimplicialComplex, d: int) -> IntegerMatrix:
    cc = chain_complex(k)
    if d in cc.boundaries:
        return cc.boundaries[d]
    return IntegerMatrix(cc.rank(d - 1), cc.rank(d), {})


def _smith_forms(cc: AugmentedChainComplex) -> Dict[int, SmithForm]:
    return {d: smith_normal_form(m) for d, m in cc.boundaries.items()}


def _cohomology_of(cc: AugmentedChainComplex, low: int, high: int) -> Cohomology:
    snf = _smith_forms(cc)
    empty = SmithForm(0, ())
    out: Cohomology = {}
    for i in range(low, high + 1):
        n_i = cc.rank(i)
        if n_i == 0:
            out[i] = TRIVIAL
            continue
        here = snf.get(i, empty)
        above = snf.get(i + 1, empty)
        # H^i = ker δ^i / im δ^{i−1}, δ^{i−1} = ∂_i^T; torsionen kommer från ∂_i
        out[i] = FinitelyGeneratedAbelianGroup.from_factors(n_i - here.rank - above.rank, here.torsion)
    return out


@lru_cache(maxsize=8192)
def _reduced_all(k: SimplicialComplex) -> Tuple[Tuple[int, FinitelyGeneratedAbelianGroup], ...]:
    cc = chain_complex(k)
    return tuple(_cohomology_of(cc, -1, k.dimension).items())


def _window(full: Mapping[int, FinitelyGeneratedAbelianGroup], low: int, high: int) -> Cohomology:
    return {d: full.get(d, TRIVIAL) for d in range(low, high + 1)}


def reduced_cohomology(k: SimplicialComplex, max_degree: Optional[int] = None) -> Cohomology:
    """H̄^i(k) för i ∈ [−1, max_degree]; H̄^{−1}(∅-komplexet) = ℤ, grader över dim k är triviala."""
    high = k.dimension if max_degree is None else max_degree
    return _window(dict(_reduced_all(k)), -1, high)


def relative_cohomology(k: SimplicialComplex, l: SimplicialComplex, max_degree: Optional[int] = None,
                        *, punctured: bool = False) -> Cohomology:
    """H̄^*(k, l) från kvoten av augmenterade kokedjekomplex.

    Ett tomt l ger H̄^*(k). Med punctured=True är ett tomt l i stället det tomma rummet
    (k med en barycentrum borttagen när k är en punkt), vilket ger oreducerad kohomologi.
    """
    extra = l.faces - k.faces
    if extra:
        raise SimplexError("Delkomplexet innehåller simplex som inte finns i komplexet")
    removed: FrozenSet = l.faces
    if l.is_empty and not punctured:
        removed = frozenset()
    basis = [s for s in k.simplices() if frozenset(s) not in removed]
    high = k.dimension if max_degree is None else max_degree
    cc = _chain_complex(k, basis)
    return _window(_cohomology_of(cc, -1, max(cc.top, -1)), -1, high)


def homology_oracle(k: SimplicialComplex, max_degree: Optional[int] = None) -> Cohomology:
    """Reducerad heltalshomologi H̄_i(k); används för universella koefficientkontroller."""
    cc = chain_complex(k)
    snf = _smith_forms(cc)
    empty = SmithForm(0, ())
    high = k.dimension if max_degree is None else max_degree
    out: Cohomology = {}
    for i in range(-1, high + 1):
        n_i = cc.rank(i)
        here = snf.get(i, empty)
        above = snf.get(i + 1, empty)
        if n_i == 0:
            out[i] = TRIVIAL
            continue
        out[i] = FinitelyGeneratedAbelianGroup.from_factors(n_i - here.rank - above.rank, above.torsion)
    return out


def reduced_euler_characteristic(groups: Mapping[int, FinitelyGeneratedAbelianGroup]) -> int:
    return sum((-1) ** d * g.free_rank for d, g in groups.items())


__all__ = [
    "Cohomology",
    "IntegerMatrix",
    "SmithForm",
    "FinitelyGeneratedAbelianGroup",
    "TRIVIAL",
    "Z",
    "AugmentedChainComplex",
    "smith_normal_form",
    "direct_sum",
    "shifted",
    "same_groups",
    "nonzero",
    "chain_complex",
    "boundary_matrix",
    "reduced_cohomology",
    "relative_cohomology",
    "homology_oracle",
    "reduced_euler_characteristic",
    "EMPTY_SIMPLEX",
]

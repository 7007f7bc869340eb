# logic/formula.py
"""H^*(A_Γ, ℤA_Γ) ur länkarnas kohomologi, samt slutsatserna om acyklicitet och dualitet."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from sympy import factorint

from ..config.constants import INFINITE_TAG
from ..utils.common import LogFn, make_log
from .complexes import (
    Graph,
    Simplex,
    SimplicialComplex,
    double_graph,
    flag_complex,
    format_simplex,
    is_single_simplex,
    link,
)
from .homology import TRIVIAL, Z, Cohomology, FinitelyGeneratedAbelianGroup, direct_sum, reduced_cohomology, shifted
from .mirrors import all_minus, lemma_formula_groups, underlying_simplex


class SingleSimplexError(ValueError):
    """Frågan saknar mening i den fria abelska grenen."""


class OracleMismatchError(AssertionError):
    """Två oberoende beräkningar av samma storhet skiljer sig: en bugg."""


# ---------------------------
# Multiplicitet och graderad modul
# ---------------------------

@dataclass(frozen=True)
class Multiplicity:
    count: Optional[int] = None  # None = ℵ₀

    @classmethod
    def finite(cls, n: int) -> "Multiplicity":
        if n < 0:
            raise ValueError(f"Negativ multiplicitet: {n}")
        return cls(n)

    @classmethod
    def countably_infinite(cls) -> "Multiplicity":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.count is None

    @property
    def is_zero(self) -> bool:
        return self.count == 0

    def __add__(self, other: "Multiplicity") -> "Multiplicity":
        if self.is_infinite or other.is_infinite:
            return INFINITE
        return Multiplicity(self.count + other.count)  # type: ignore[operator]

    def scaled(self, n: int) -> "Multiplicity":
        if n == 0:
            return ZERO
        return INFINITE if self.is_infinite else Multiplicity(self.count * n)  # type: ignore[operator]

    def to_json(self):
        return INFINITE_TAG if self.is_infinite else self.count

    @classmethod
    def from_json(cls, value) -> "Multiplicity":
        return INFINITE if value == INFINITE_TAG else cls(int(value))

    def __str__(self) -> str:
        return "ℵ₀" if self.is_infinite else str(self.count)


ZERO = Multiplicity(0)
ONE = Multiplicity(1)
INFINITE = Multiplicity(None)
SummandMultiplicity = Multiplicity


@dataclass(frozen=True)
class Provenance:
    sigma: Simplex
    link_degree: int


@dataclass(frozen=True)
class CollapsedGroup:
    """Kanonisk vy av en gradkomponent: fri del och primära torsionssummander, var och en med multiplicitet."""
    free: Multiplicity = ZERO
    torsion: Tuple[Tuple[int, Multiplicity], ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free.is_zero and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def to_json(self) -> dict:
        return {"free": self.free.to_json(),
                "torsion": [{"d": d, "mult": m.to_json()} for d, m in self.torsion]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CollapsedGroup":
        return cls(Multiplicity.from_json(data["free"]),
                   tuple((int(t["d"]), Multiplicity.from_json(t["mult"])) for t in data["torsion"]))

    def __str__(self) -> str:
        parts = []
        if not self.free.is_zero:
            parts.append(f"ℤ×{self.free}")
        parts.extend(f"ℤ_{d}×{m}" for d, m in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def tags(self) -> str:
        """Summanderna med multiplicitetstaggar, t.ex. 'ℤ:inf ℤ_2:inf'."""
        parts = []
        if not self.free.is_zero:
            parts.append(f"ℤ:{self.free.to_json()}")
        parts.extend(f"ℤ_{d}:{m.to_json()}" for d, m in self.torsion)
        return " ".join(parts) if parts else "0"


def collapse(summands: List[Tuple[FinitelyGeneratedAbelianGroup, Multiplicity]]) -> CollapsedGroup:
    free = ZERO
    primary: Dict[int, Multiplicity] = {}
    for grp, mult in summands:
        free = free + mult.scaled(grp.free_rank)
        for d in grp.torsion:
            for p, e in factorint(d).items():
                q = int(p) ** int(e)
                primary[q] = primary.get(q, ZERO) + mult
    return CollapsedGroup(free, tuple(sorted(primary.items())))


@dataclass(frozen=True)
class GradedModuleDescription:
    per_degree: Dict[int, Tuple[Tuple[FinitelyGeneratedAbelianGroup, Multiplicity], ...]]
    provenance: Dict[int, Tuple[Provenance, ...]] = field(default_factory=dict)

    def degrees(self) -> List[int]:
        return sorted(d for d, s in self.per_degree.items() if s)

    def is_zero_in(self, n: int) -> bool:
        return not self.per_degree.get(n)

    def top_degree(self) -> Optional[int]:
        degs = self.degrees()
        return degs[-1] if degs else None

    def collapsed(self, n: int) -> CollapsedGroup:
        return collapse(list(self.per_degree.get(n, ())))

    def canonical(self) -> Dict[int, CollapsedGroup]:
        return {d: self.collapsed(d) for d in self.degrees()}

    def has_finite_multiplicity(self) -> bool:
        return any(not m.is_infinite for s in self.per_degree.values() for _, m in s)


class _Builder:
    def __init__(self) -> None:
        self.groups: Dict[int, List[Tuple[FinitelyGeneratedAbelianGroup, Multiplicity]]] = {}
        self.prov: Dict[int, List[Provenance]] = {}

    def add(self, degree: int, grp: FinitelyGeneratedAbelianGroup, mult: Multiplicity,
            sigma: Simplex, link_degree: int) -> None:
        if grp.is_trivial or mult.is_zero:
            return
        self.groups.setdefault(degree, []).append((grp, mult))
        self.prov.setdefault(degree, []).append(Provenance(sigma, link_degree))

    def build(self) -> GradedModuleDescription:
        return GradedModuleDescription(
            {d: tuple(self.groups[d]) for d in sorted(self.groups)},
            {d: tuple(self.prov[d]) for d in sorted(self.prov)},
        )


# ---------------------------
# Huvudsatsen
# ---------------------------

def main_theorem_cohomology(g: Graph, log: LogFn = None) -> GradedModuleDescription:
    _log = make_log(log)
    k = flag_complex(g)
    out = _Builder()
    if is_single_simplex(k):
        top = k.simplices()[-1]
        _log(f"Flaggkomplexet är ett enda simplex {format_simplex(top)}: A_Γ = ℤ^{len(top)}.")
        out.add(k.dimension + 1, Z, ONE, top, -1)
        return out.build()

    simplex_list = k.simplices()
    _log(f"Summerar över {len(simplex_list)} simplex (inklusive ∅).")
    for sigma in simplex_list:
        shift = len(sigma) + 1  # |σ| + 2
        for j, grp in reduced_cohomology(link(k, sigma)).items():
            out.add(j + shift, grp, INFINITE, sigma, j)
    return out.build()


def per_copy_groups(g: Graph) -> Cohomology:
    """En kopia av summan: ⊕_σ H̄^{n−|σ|−2}(Lk σ), grad för grad."""
    k = flag_complex(g)
    terms = [{d: TRIVIAL for d in range(0, k.dimension + 2)}]
    for sigma in k.simplices():
        terms.append(shifted(reduced_cohomology(link(k, sigma)), len(sigma) + 1))
    return direct_sum(*terms)


def coxeter_cohomology(g: Graph, log: LogFn = None) -> GradedModuleDescription:
    """Coxetersidan: H̄^{*−1}(Γ̂′) en gång plus ℵ₀ kopior av H̄^{*−1}(Γ̂′ − σ′) för varje σ′ ≠ ∅.

    Γ̂′ − σ′ reduceras till den helt negativa bilden och räknas med länkformeln för L_σ.
    """
    _log = make_log(log)
    k = flag_complex(g)
    doubled = flag_complex(double_graph(g))
    cache: Dict[Simplex, Cohomology] = {}
    out = _Builder()
    for sigma_prime in doubled.simplices():
        base = underlying_simplex(k, all_minus(sigma_prime))
        if base not in cache:
            cache[base] = lemma_formula_groups(k, base)
        mult = ONE if not sigma_prime else INFINITE
        for j, grp in cache[base].items():
            out.add(j + 1, grp, mult, tuple(sigma_prime), j)
    _log(f"Coxetersidan: {len(doubled.faces)} simplex i Γ̂′, {len(cache)} olika L_σ.")
    return out.build()


def cohomological_dimension(g: Graph) -> int:
    top = main_theorem_cohomology(g).top_degree()
    return 0 if top is None else top


def free_abelian_rank(g: Graph) -> Optional[int]:
    k = flag_complex(g)
    return len(k.vertex_order) if is_single_simplex(k) else None


# ---------------------------
# Acyklicitet i oändligheten
# ---------------------------

@dataclass(frozen=True)
class AcyclicityVerdict:
    n: int
    passed: bool
    degree: Optional[int] = None
    sigma: Optional[Simplex] = None
    link_degree: Optional[int] = None
    reason: str = ""


def _require_infinite_branch(k: SimplicialComplex) -> None:
    if is_single_simplex(k):
        raise SingleSimplexError("Γ̂ är ett enda simplex: A_Γ är fri abelsk, använd den grenen i stället.")


def _check_description(desc: GradedModuleDescription, n: int) -> AcyclicityVerdict:
    for i in desc.degrees():
        if i <= n + 1:
            p = desc.provenance[i][0]
            return AcyclicityVerdict(n, False, i, p.sigma, p.link_degree, f"H^{i} ≠ 0")
    for (grp, _), p in zip(desc.per_degree.get(n + 2, ()), desc.provenance.get(n + 2, ())):
        if not grp.is_torsion_free:
            return AcyclicityVerdict(n, False, n + 2, p.sigma, p.link_degree, f"H^{n + 2} har torsion")
    return AcyclicityVerdict(n, True)


def check_acyclic_at_infinity(g: Graph, n: int) -> AcyclicityVerdict:
    """H^i(A, ℤA) = 0 för i ≤ n+1 och H^{n+2} torsionsfri."""
    _require_infinite_branch(flag_complex(g))
    return _check_description(main_theorem_cohomology(g), n)


def acyclic_at_infinity_up_to(g: Graph) -> int:
    k = flag_complex(g)
    _require_infinite_branch(k)
    desc = main_theorem_cohomology(g)
    n = -2
    while n <= k.dimension + 1 and _check_description(desc, n + 1).passed:
        n += 1
    return n


def acyclic_via_links(g: Graph, n: int) -> AcyclicityVerdict:
    """Länkvillkoret: Lk(σ) är (n − |σ| − 1)-acyklisk för alla σ.

    m-acyklisk läses kohomologiskt: H̄^i = 0 för i ≤ m och H̄^{m+1} torsionsfri;
    (−1)-acyklisk betyder icketom och ∅ är (−2)-acyklisk.
    """
    k = flag_complex(g)
    _require_infinite_branch(k)
    for sigma in k.simplices():
        m = n - len(sigma)  # n − |σ| − 1
        groups = reduced_cohomology(link(k, sigma), max(m + 1, -1))
        for i in range(-1, m + 1):
            if not groups.get(i, TRIVIAL).is_trivial:
                return AcyclicityVerdict(n, False, i + len(sigma) + 1, sigma, i,
                                         f"Lk{format_simplex(sigma)} har H̄^{i} ≠ 0")
        top = groups.get(m + 1, TRIVIAL)
        if not top.is_torsion_free:
            return AcyclicityVerdict(n, False, m + len(sigma) + 2, sigma, m + 1,
                                     f"Lk{format_simplex(sigma)} har torsion i H̄^{m + 1}")
    return AcyclicityVerdict(n, True)


# ---------------------------
# Cohen–Macaulay och dualitet
# ---------------------------

@dataclass(frozen=True)
class CohenMacaulayVerdict:
    holds: bool
    sigma: Optional[Simplex] = None
    degree: Optional[int] = None
    reason: str = ""


def is_cohen_macaulay(g: Graph) -> CohenMacaulayVerdict:
    k = flag_complex(g)
    for sigma in k.simplices():
        lk = link(k, sigma)
        top = lk.dimension
        groups = reduced_cohomology(lk)
        for i in range(-1, top):
            if not groups[i].is_trivial:
                return CohenMacaulayVerdict(False, sigma, i, f"H̄^{i}(Lk{format_simplex(sigma)}) ≠ 0 under toppdimension {top}")
        if not groups[top].is_torsion_free:
            return CohenMacaulayVerdict(False, sigma, top, f"H̄^{top}(Lk{format_simplex(sigma)}) har torsion")
    return CohenMacaulayVerdict(True)


def _duality_from_cohomology(desc: GradedModuleDescription) -> bool:
    degs = desc.degrees()
    return len(degs) == 1 and desc.collapsed(degs[0]).is_torsion_free


def is_duality_group(g: Graph) -> bool:
    via_links = is_cohen_macaulay(g).holds
    direct = _duality_from_cohomology(main_theorem_cohomology(g))
    if via_links != direct:
        raise OracleMismatchError(
            f"Dualitet: Cohen–Macaulay säger {via_links}, kohomologin säger {direct}")
    return direct


def is_poincare_duality(g: Graph) -> bool:
    by_shape = is_single_simplex(flag_complex(g))
    desc = main_theorem_cohomology(g)
    degs = desc.degrees()
    exactly_z = len(degs) == 1 and desc.collapsed(degs[0]) == CollapsedGroup(ONE, ())
    if by_shape != exactly_z:
        raise OracleMismatchError(
            f"Poincarédualitet: simplexgrenen säger {by_shape}, kohomologin säger {exactly_z}")
    return by_shape


def duality_dimension(g: Graph) -> Optional[int]:
    return cohomological_dimension(g) if is_duality_group(g) else None

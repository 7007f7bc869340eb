# logic/mirrors.py
"""Spegelkomplex L_σ = W_σ × Γ̂ / ∼ för den elementärabelska gruppen W = (ℤ_2)^V.

Tre oberoende sätt att få H̄^*(L_σ): direkt SNF på det realiserade komplexet,
Davis formel (summa över w ∈ W_σ av relativ kohomologi) och länkformeln
(summa över τ disjunkt från σ av förskjuten länkkohomologi).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..utils.common import resolve_exponent_bound
from .complexes import (
    Graph,
    Simplex,
    SimplicialComplex,
    _require_simplex,
    barycentric_subdivision,
    double_graph,
    flag_complex,
    format_simplex,
    full_subcomplex,
    link,
    mirror_union,
)
from .homology import TRIVIAL, Cohomology, direct_sum, reduced_cohomology, relative_cohomology, shifted


class OracleTooLargeError(RuntimeError):
    """2^n-uppräkningen överstiger exponentgränsen."""


@dataclass(frozen=True)
class CoxeterElement:
    """w ∈ W, bestämt av mängden S(w) av generatorer; gruppoperation = symmetrisk differens."""
    generators: FrozenSet = frozenset()

    @classmethod
    def identity(cls) -> "CoxeterElement":
        return cls(frozenset())

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        return CoxeterElement(self.generators ^ other.generators)

    def inverse(self) -> "CoxeterElement":
        return self

    def reduce(self, stabilizer: Iterable) -> "CoxeterElement":
        """Minsta representant för sidoklassen w·⟨stabilizer⟩."""
        return CoxeterElement(self.generators - frozenset(stabilizer))

    def __str__(self) -> str:
        if not self.generators:
            return "1"
        return "·".join(sorted(str(v) for v in self.generators))


@dataclass(frozen=True)
class MirrorComplex:
    base: SimplicialComplex
    sigma: Simplex
    realized: SimplicialComplex

    @property
    def group_order(self) -> int:
        return 2 ** (len(self.base.vertex_order) - len(self.sigma))


def _guard(n: int, exponent_bound: Optional[int], what: str) -> None:
    bound = resolve_exponent_bound(exponent_bound)
    if n > bound:
        raise OracleTooLargeError(
            f"{what}: 2^{n} termer överstiger exponentgränsen {bound}. "
            f"Höj med --exponent-bound eller miljövariabeln RAAG_EXPONENT_BOUND, eller välj en mindre graf."
        )


def _free_generators(k: SimplicialComplex, sigma: Iterable) -> List:
    face = _require_simplex(k, sigma)
    return [v for v in k.vertex_order if v not in face]


def coxeter_elements(generators: List) -> Iterator[CoxeterElement]:
    """W_σ i kanonisk ordning: efter storlek, sedan lexikografiskt i hörnordningen."""
    for size in range(len(generators) + 1):
        for sub in combinations(generators, size):
            yield CoxeterElement(frozenset(sub))


def stabilizer(k: SimplicialComplex, x: Iterable, sigma: Iterable) -> FrozenSet:
    """Generatorer för W_x ∩ W_σ: v ∉ σ med x ∈ Γ̂_v (dvs x ligger i det fulla delkomplexet på V − {v})."""
    x_face = _require_simplex(k, x)
    free = _free_generators(k, sigma)
    return frozenset(v for v in free if x_face <= frozenset(k.vertex_order) - {v})


def _mirror_vertex_key(k: SimplicialComplex) -> Callable:
    def key(label: Tuple[CoxeterElement, object]) -> Tuple[int, Tuple[int, ...]]:
        w, u = label
        return (k.index[u], tuple(sorted(k.index[g] for g in w.generators)))
    return key


def mirror_complex(k: SimplicialComplex, sigma: Iterable = (), *,
                   exponent_bound: Optional[int] = None) -> MirrorComplex:
    sigma = k.canonical(sigma)
    free = _free_generators(k, sigma)
    _guard(len(free), exponent_bound, f"Spegelkomplex för σ = {format_simplex(sigma)}")

    vertex_stab = {u: stabilizer(k, (u,), sigma) for u in k.vertex_order}
    faces = {frozenset()}
    labels = set()
    for w in coxeter_elements(free):
        for x in k.faces:
            if not x:
                continue
            # (w, x) ∼ (w', x) ⇔ w⁻¹w' ∈ W_x; hörnet u av cellen får klassen w·W_u
            cell = frozenset((w.reduce(vertex_stab[u]), u) for u in x)
            faces.add(cell)
            labels.update(cell)
    order = tuple(sorted(labels, key=_mirror_vertex_key(k)))
    return MirrorComplex(k, sigma, SimplicialComplex(order, frozenset(faces)))


@lru_cache(maxsize=4096)
def _davis_term(k: SimplicialComplex, support: FrozenSet, high: int) -> Tuple:
    """H̄^*(Γ̂, Γ̂^{S(w)}) beror bara på S(w); samma term återkommer för alla σ disjunkta från S(w)."""
    union = mirror_union(k, support)
    return tuple(relative_cohomology(k, union, high, punctured=bool(support)).items())


def davis_formula_groups(k: SimplicialComplex, sigma: Iterable = (), max_degree: Optional[int] = None, *,
                         exponent_bound: Optional[int] = None) -> Cohomology:
    """⊕_{w ∈ W_σ} H̄^*(Γ̂, Γ̂^{S(w)}), där S(1) = ∅ ger H̄^*(Γ̂)."""
    sigma = k.canonical(sigma)
    free = _free_generators(k, sigma)
    _guard(len(free), exponent_bound, f"Davis formel för σ = {format_simplex(sigma)}")
    high = k.dimension if max_degree is None else max_degree
    return direct_sum(*(dict(_davis_term(k, w.generators, high)) for w in coxeter_elements(free)))


def lemma_formula_groups(k: SimplicialComplex, sigma: Iterable = (),
                         max_degree: Optional[int] = None) -> Cohomology:
    """⊕_{τ ∩ σ = ∅} H̄^{* − |τ| − 1}(Lk τ)."""
    face = _require_simplex(k, sigma)
    high = k.dimension if max_degree is None else max_degree
    terms: List[Cohomology] = [{d: TRIVIAL for d in range(-1, high + 1)}]
    for tau in k.simplices():
        if face & frozenset(tau):
            continue
        shift = len(tau)  # |τ| + 1
        if high - shift < -1:
            continue
        terms.append(shifted(reduced_cohomology(link(k, tau), high - shift), shift))
    return direct_sum(*terms)


# ---------------------------
# Γ̂′ − σ och isomorfin L_Γ ≅ Γ̂′
# ---------------------------

def opposite_simplex(sigma: Iterable) -> Simplex:
    """Bilden av σ ⊂ Γ̂ i den motsatta inbäddningen {(v, −1)}."""
    return tuple((v, -1) for v in sigma)


def all_minus(sigma_prime: Iterable) -> Simplex:
    """Teckenbytesautomorfin: varje (v, ±1) skickas till (v, −1)."""
    return tuple((v, -1) for v, _ in sigma_prime)


def underlying_simplex(k: SimplicialComplex, sigma_prime: Iterable) -> Simplex:
    return k.canonical(v for v, _ in sigma_prime)


def punctured_double_model(g: Graph, sigma: Iterable) -> SimplicialComplex:
    """Γ̂′ minus det slutna simplexet σ: barycentrisk indelning, sedan fullt delkomplex
    på barycentrumen för simplex som inte ligger i σ."""
    doubled = flag_complex(double_graph(g))
    face = _require_simplex(doubled, sigma)
    sd = barycentric_subdivision(doubled)
    keep = [b for b in sd.vertex_order if not frozenset(b) <= face]
    return full_subcomplex(sd, keep)


@dataclass(frozen=True)
class DoubleLinkWitness:
    mapping: Tuple[Tuple[object, object], ...]
    mirror_vertices: int
    double_vertices: int
    mirror_simplices: int
    double_simplices: int
    missing: Tuple[Simplex, ...]    # simplex i Γ̂′ som ingen cell avbildas på
    unexpected: Tuple[Simplex, ...]  # bilder som inte är simplex i Γ̂′
    verified: bool


def double_link_bijection(g: Graph, *, exponent_bound: Optional[int] = None) -> DoubleLinkWitness:
    """[(w, v)] ↦ (v, −1 om v ∈ S(w) mod W_v annars +1), kontrollerad som simplicial isomorfi."""
    k = flag_complex(g)
    mirror = mirror_complex(k, (), exponent_bound=exponent_bound).realized
    doubled = flag_complex(double_graph(g))

    mapping: Dict[object, object] = {}
    for label in mirror.vertex_order:
        w, v = label
        mapping[label] = (v, -1 if v in w.generators else 1)

    injective = len(set(mapping.values())) == len(mapping)
    image = {frozenset(mapping[x] for x in f) for f in mirror.faces}
    missing = [s for s in doubled.simplices() if frozenset(s) not in image]
    unexpected = sorted((f for f in image if f not in doubled.faces), key=lambda f: (len(f), sorted(map(str, f))))
    return DoubleLinkWitness(
        mapping=tuple(mapping.items()),
        mirror_vertices=len(mirror.vertex_order),
        double_vertices=len(doubled.vertex_order),
        mirror_simplices=len(mirror.faces),
        double_simplices=len(doubled.faces),
        missing=tuple(missing),
        unexpected=tuple(tuple(sorted(f, key=str)) for f in unexpected),
        verified=injective and not missing and not unexpected and len(image) == len(mirror.faces),
    )

# logic/validation.py
"""Korskontroller mellan oberoende beräkningar, per graf och över en hel graf-korpus."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import pandas as pd

from ..config.constants import (
    CORPUS_VERTEX_LIMIT,
    DEFAULT_CORPUS_MAX_VERTICES,
    DELETION_MODEL_MAX_VERTICES,
    ORACLE_NAMES,
)
from ..utils.common import LogFn, make_log
from .complexes import (
    Graph,
    Simplex,
    SimplicialComplex,
    flag_complex,
    format_simplex,
    is_single_simplex,
    link,
    mirror_union,
)
from .formula import (
    OracleMismatchError,
    acyclic_at_infinity_up_to,
    acyclic_via_links,
    check_acyclic_at_infinity,
    cohomological_dimension,
    coxeter_cohomology,
    is_duality_group,
    is_poincare_duality,
    main_theorem_cohomology,
    per_copy_groups,
)
from .homology import Cohomology, reduced_cohomology, relative_cohomology, same_groups, shifted
from .mirrors import (
    davis_formula_groups,
    double_link_bijection,
    lemma_formula_groups,
    mirror_complex,
    opposite_simplex,
    punctured_double_model,
)


class CorpusBoundError(ValueError):
    """Korpusen är större än den konfigurerade gränsen."""


VALIDATION_COLUMNS = ["Orakel", "σ", "Vänster", "Höger", "Avvikande grader", "Status", "Anmärkning"]


@dataclass(frozen=True)
class OracleCheck:
    oracle: str
    sigma: Simplex
    left: Mapping[int, object]
    right: Mapping[int, object]
    mismatched: Tuple[int, ...] = ()
    detail: str = ""

    @property
    def passed(self) -> bool:
        return not self.mismatched and not self.detail.startswith("FEL")


def _fmt_groups(groups: Mapping[int, object]) -> str:
    parts = [f"{d}: {g}" for d, g in sorted(groups.items()) if str(g) != "0"]
    return "; ".join(parts) if parts else "0"


def _check(oracle: str, sigma: Simplex, left: Cohomology, right: Cohomology) -> OracleCheck:
    return OracleCheck(oracle, sigma, left, right, tuple(same_groups(left, right)))


class _SigmaGroups:
    """De tre beräkningarna av H̄^*(L_σ) för ett σ, var och en högst en gång."""

    def __init__(self, k: SimplicialComplex, sigma: Simplex, high: int, exponent_bound: Optional[int]):
        self.k = k
        self.sigma = sigma
        self.high = high
        self.exponent_bound = exponent_bound

    @cached_property
    def snf(self) -> Cohomology:
        realized = mirror_complex(self.k, self.sigma, exponent_bound=self.exponent_bound).realized
        return reduced_cohomology(realized, self.high)

    @cached_property
    def davis(self) -> Cohomology:
        return davis_formula_groups(self.k, self.sigma, self.high, exponent_bound=self.exponent_bound)

    @cached_property
    def lemma(self) -> Cohomology:
        return lemma_formula_groups(self.k, self.sigma, self.high)


def _per_sigma(g: Graph, groups: _SigmaGroups, oracle: str) -> OracleCheck:
    if oracle == "mirror":
        return _check(oracle, groups.sigma, groups.snf, groups.lemma)
    if oracle == "davis":
        return _check(oracle, groups.sigma, groups.davis, groups.snf)
    if oracle == "lemma":
        return _check(oracle, groups.sigma, groups.lemma, groups.davis)
    if oracle == "deletion":
        model = punctured_double_model(g, opposite_simplex(groups.sigma))
        return _check(oracle, groups.sigma, reduced_cohomology(model, groups.high), groups.lemma)
    raise ValueError(f"Okänt σ-orakel: {oracle}")


def _double_link_check(g: Graph, exponent_bound: Optional[int]) -> OracleCheck:
    w = double_link_bijection(g, exponent_bound=exponent_bound)
    counts = {0: f"{w.mirror_vertices} hörn, {w.mirror_simplices} simplex"}
    target = {0: f"{w.double_vertices} hörn, {w.double_simplices} simplex"}
    if w.verified:
        return OracleCheck("doublelink", (), counts, target, detail="isomorfi verifierad")
    bad = [format_simplex(s) for s in (w.missing + w.unexpected)[:3]]
    return OracleCheck("doublelink", (), counts, target, detail=f"FEL: ingen isomorfi ({', '.join(bad)})")


def _coxeter_check(g: Graph) -> OracleCheck:
    left = main_theorem_cohomology(g).canonical()
    right = coxeter_cohomology(g).canonical()
    mismatched = tuple(d for d in sorted(set(left) | set(right)) if left.get(d) != right.get(d))
    return OracleCheck("coxeter", (), left, right, mismatched)


def _normalize_oracles(oracle: Union[str, Sequence[str]]) -> List[str]:
    names = [oracle] if isinstance(oracle, str) else list(oracle)
    for name in names:
        if name not in ORACLE_NAMES:
            raise ValueError(f"Okänt orakel: {name!r} (välj bland {', '.join(ORACLE_NAMES)})")
    return names


def validate_graph(g: Graph, oracle: Union[str, Sequence[str]] = "lemma",
                   sigmas: Optional[Iterable[Iterable]] = None, max_degree: Optional[int] = None,
                   exponent_bound: Optional[int] = None, log: LogFn = None) -> List[OracleCheck]:
    """Jämför de utpekade beräkningsparen grad för grad. σ-väljaren gäller spegelsidans orakel;
    standard är alla simplex i Γ̂ (inklusive ∅)."""
    _log = make_log(log)
    names = _normalize_oracles(oracle)
    k = flag_complex(g)
    high = k.dimension if max_degree is None else max_degree
    selected = k.simplices() if sigmas is None else [k.canonical(s) for s in sigmas]

    checks: List[OracleCheck] = []
    per_sigma = [n for n in names if n not in ("doublelink", "coxeter")]
    if per_sigma:
        for sigma in selected:
            groups = _SigmaGroups(k, sigma, high, exponent_bound)
            for name in per_sigma:
                checks.append(_per_sigma(g, groups, name))
        _log(f"{len(selected)} σ × {len(per_sigma)} orakel kontrollerade.")
    if "doublelink" in names:
        checks.append(_double_link_check(g, exponent_bound))
    if "coxeter" in names:
        checks.append(_coxeter_check(g))
    failed = sum(not c.passed for c in checks)
    if failed:
        _log(f"{failed} av {len(checks)} kontroller misslyckades.")
    return checks


def validation_frame(checks: Sequence[OracleCheck]) -> pd.DataFrame:
    rows = [{
        "Orakel": c.oracle,
        "σ": format_simplex(c.sigma),
        "Vänster": _fmt_groups(c.left),
        "Höger": _fmt_groups(c.right),
        "Avvikande grader": ",".join(map(str, c.mismatched)),
        "Status": "OK" if c.passed else "FEL",
        "Anmärkning": c.detail.removeprefix("FEL: "),
    } for c in checks]
    return pd.DataFrame(rows, columns=VALIDATION_COLUMNS)


# ---------------------------
# Egenskapskontroller utöver spegelsidan
# ---------------------------

def shift_identity_checks(g: Graph) -> List[OracleCheck]:
    """H̄^i(Γ̂, Γ̂_{b(τ)}) = H̄^{i−|τ|−1}(Lk τ) för alla icketomma τ och i ∈ [−1, dim Γ̂ + 1]."""
    k = flag_complex(g)
    high = k.dimension + 1
    checks = []
    for tau in k.simplices():
        if not tau:
            continue
        left = relative_cohomology(k, mirror_union(k, tau), high, punctured=True)
        right = shifted(reduced_cohomology(link(k, tau), high - len(tau)), len(tau))
        checks.append(_check("shift", tau, left, right))
    return checks


def per_copy_check(g: Graph) -> OracleCheck:
    k = flag_complex(g)
    left = per_copy_groups(g)
    right = shifted(lemma_formula_groups(k, (), k.dimension), 1)
    return _check("percopy", (), left, right)


def corollary_checks(g: Graph) -> List[OracleCheck]:
    """Acyklicitet (algebraiskt mot länkvillkoret), dualitet, Poincarédualitet och cd."""
    k = flag_complex(g)
    out: List[OracleCheck] = []

    if not is_single_simplex(k):
        bad = []
        previous = True
        for n in range(-2, k.dimension + 2):
            algebraic = check_acyclic_at_infinity(g, n).passed
            via_links = acyclic_via_links(g, n).passed
            if algebraic != via_links or (algebraic and not previous):
                bad.append(n)
            previous = algebraic
        out.append(OracleCheck("acyclicity", (), {}, {}, tuple(bad)))

    try:
        is_duality_group(g)
        out.append(OracleCheck("duality", (), {}, {}))
    except OracleMismatchError as exc:
        out.append(OracleCheck("duality", (), {}, {}, detail=f"FEL: {exc}"))

    complete = len(g.edges) == len(g.vertices) * (len(g.vertices) - 1) // 2
    try:
        poincare = is_poincare_duality(g)
        detail = "" if poincare == complete else "FEL: Poincaré ⇔ fullständig graf bryts"
    except OracleMismatchError as exc:
        detail = f"FEL: {exc}"
    out.append(OracleCheck("poincare", (), {}, {}, detail=detail))

    cd = cohomological_dimension(g)
    out.append(OracleCheck("cd", (), {0: cd}, {0: k.dimension + 1},
                           () if cd == k.dimension + 1 else (cd,)))
    return out


# ---------------------------
# Korpus
# ---------------------------

def labeled_graphs(n: int) -> Iterator[Graph]:
    """Alla märkta grafer på hörnen v1..vn, i ordning efter kantdelmängdens binära kod."""
    vertices = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(vertices, 2))
    for mask in range(2 ** len(pairs)):
        yield Graph.build(vertices, [p for i, p in enumerate(pairs) if mask >> i & 1])


def dedup_isomorphic(graphs: Iterable[Graph]) -> List[Graph]:
    """En representant per isomorfiklass (WL-hash som hink, nx.is_isomorphic inom hinken)."""
    buckets: Dict[Tuple[int, str], List[nx.Graph]] = {}
    out: List[Graph] = []
    for g in graphs:
        ng = g.to_networkx()
        key = (len(g.vertices), nx.weisfeiler_lehman_graph_hash(ng))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(ng, other) for other in bucket):
            continue
        bucket.append(ng)
        out.append(g)
    return out


def graph_label(g: Graph) -> str:
    edges = " ".join(f"{a}-{b}" for a, b in g.sorted_edges())
    return f"n={len(g.vertices)} [{edges}]"


CORPUS_COLUMNS = ["Graf", "Hörn", "Kanter", "f-vektor", "cd", "Max acyklicitet", "Dualitet", "Poincaré", "Fel"]


@dataclass
class CorpusSummary:
    frame: pd.DataFrame
    graphs: int = 0
    duality_groups: int = 0
    poincare_groups: int = 0
    acyclicity_histogram: Dict[str, int] = field(default_factory=dict)
    failures: List[Tuple[str, OracleCheck]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def histogram_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"Max acyklicitet": key, "Antal": cnt} for key, cnt in self.acyclicity_histogram.items()],
            columns=["Max acyklicitet", "Antal"],
        )

    def failure_frame(self) -> pd.DataFrame:
        frame = validation_frame([c for _, c in self.failures])
        frame.insert(0, "Graf", [label for label, _ in self.failures])
        return frame


def all_graph_checks(g: Graph, exponent_bound: Optional[int] = None,
                     max_degree: Optional[int] = None) -> List[OracleCheck]:
    """Alla orakel plus egenskapskontrollerna för en graf."""
    oracles = ["mirror", "davis", "lemma", "doublelink", "coxeter"]
    if len(g.vertices) <= DELETION_MODEL_MAX_VERTICES:
        oracles.insert(3, "deletion")
    checks = validate_graph(g, oracles, max_degree=max_degree, exponent_bound=exponent_bound)
    checks.extend(shift_identity_checks(g))
    checks.append(per_copy_check(g))
    checks.extend(corollary_checks(g))
    return checks


def run_corpus(max_vertices: int = DEFAULT_CORPUS_MAX_VERTICES, *, all_sizes: bool = False,
               dedup: bool = False, max_degree: Optional[int] = None, exponent_bound: Optional[int] = None,
               log: LogFn = None) -> CorpusSummary:
    _log = make_log(log)
    if not 1 <= max_vertices <= CORPUS_VERTEX_LIMIT:
        raise CorpusBoundError(f"maxVertices måste ligga i 1..{CORPUS_VERTEX_LIMIT} (fick {max_vertices})")

    sizes = range(1, max_vertices + 1) if all_sizes else [max_vertices]
    graphs: List[Graph] = [g for n in sizes for g in labeled_graphs(n)]
    if dedup:
        before = len(graphs)
        graphs = dedup_isomorphic(graphs)
        _log(f"Isomorfireduktion: {before} → {len(graphs)} grafer.")

    rows = []
    summary = CorpusSummary(frame=pd.DataFrame(columns=CORPUS_COLUMNS))
    histogram: Dict[str, int] = {}
    for i, g in enumerate(graphs, 1):
        k = flag_complex(g)
        label = graph_label(g)
        checks = all_graph_checks(g, exponent_bound, max_degree)
        failed = [c for c in checks if not c.passed]
        summary.failures.extend((label, c) for c in failed)

        simplex = is_single_simplex(k)
        acyc = "simplex" if simplex else str(acyclic_at_infinity_up_to(g))
        histogram[acyc] = histogram.get(acyc, 0) + 1
        try:
            duality = is_duality_group(g)
            poincare = is_poincare_duality(g)
        except OracleMismatchError:
            duality = poincare = False
        summary.duality_groups += duality
        summary.poincare_groups += poincare
        rows.append({
            "Graf": label,
            "Hörn": len(g.vertices),
            "Kanter": len(g.edges),
            "f-vektor": str(k.f_vector()),
            "cd": cohomological_dimension(g),
            "Max acyklicitet": acyc,
            "Dualitet": duality,
            "Poincaré": poincare,
            "Fel": len(failed),
        })
        if i % 100 == 0:
            _log(f"{i}/{len(graphs)} grafer klara.")

    summary.graphs = len(graphs)
    summary.frame = pd.DataFrame(rows, columns=CORPUS_COLUMNS)
    summary.acyclicity_histogram = dict(sorted(histogram.items(), key=lambda kv: (kv[0] == "simplex", _num(kv[0]))))
    _log(f"Korpus klar: {summary.graphs} grafer, {len(summary.failures)} fel.")
    return summary


def _num(key: str) -> int:
    return int(key) if key.lstrip("-").isdigit() else 0

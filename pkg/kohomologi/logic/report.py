# logic/report.py
"""Rapporten för en graf: indata, kanonisk H^*(A_Γ, ℤA_Γ), utslag och proveniens."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import pandas as pd

from ..io.schemas import PROVENANCE_COLUMNS, PROVENANCE_KEYS, REPORT_KEYS, VERDICT_KEYS, VERDICT_LABELS
from ..utils.common import LogFn, make_log
from .complexes import Graph, flag_complex, format_simplex, format_vertex, is_single_simplex, link
from .formula import (
    CollapsedGroup,
    acyclic_at_infinity_up_to,
    cohomological_dimension,
    duality_dimension,
    free_abelian_rank,
    is_cohen_macaulay,
    is_duality_group,
    is_poincare_duality,
    main_theorem_cohomology,
)
from .homology import nonzero, reduced_cohomology


@dataclass(frozen=True)
class ProvenanceRow:
    sigma: str
    link_f_vector: Tuple[int, ...]
    link_cohomology: str
    link_degree: int
    degree: int
    group: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["link_f_vector"] = list(self.link_f_vector)
        return {key: d[key] for key in PROVENANCE_KEYS}

    @classmethod
    def from_dict(cls, data: Mapping) -> "ProvenanceRow":
        return cls(
            sigma=str(data["sigma"]),
            link_f_vector=tuple(int(x) for x in data["link_f_vector"]),
            link_cohomology=str(data["link_cohomology"]),
            link_degree=int(data["link_degree"]),
            degree=int(data["degree"]),
            group=str(data["group"]),
        )


@dataclass(frozen=True)
class Report:
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    f_vector: Tuple[int, ...]
    cohomology: Dict[int, CollapsedGroup]
    verdicts: Dict[str, Optional[object]]
    provenance: Tuple[ProvenanceRow, ...] = field(default_factory=tuple)

    @property
    def free_abelian_branch(self) -> bool:
        return bool(self.verdicts.get("free_abelian_branch"))

    # -------- JSON --------
    def to_dict(self) -> dict:
        body = {
            "graph": {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]},
            "f_vector": list(self.f_vector),
            "cohomology": {str(d): grp.to_json() for d, grp in sorted(self.cohomology.items())},
            "verdicts": {key: self.verdicts.get(key) for key in VERDICT_KEYS},
            "provenance": [row.to_dict() for row in self.provenance],
        }
        return {key: body[key] for key in REPORT_KEYS}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Report":
        graph = data["graph"]
        return cls(
            vertices=tuple(graph["vertices"]),
            edges=tuple((a, b) for a, b in graph["edges"]),
            f_vector=tuple(int(x) for x in data["f_vector"]),
            cohomology={int(d): CollapsedGroup.from_json(g) for d, g in data["cohomology"].items()},
            verdicts={key: data["verdicts"].get(key) for key in VERDICT_KEYS},
            provenance=tuple(ProvenanceRow.from_dict(r) for r in data.get("provenance", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    # -------- tabeller --------
    def provenance_frame(self) -> pd.DataFrame:
        rows = [row.to_dict() for row in self.provenance]
        df = pd.DataFrame(rows, columns=PROVENANCE_KEYS)
        df["link_f_vector"] = df["link_f_vector"].map(lambda v: "(" + ", ".join(map(str, v)) + ")")
        return df.rename(columns=PROVENANCE_COLUMNS)

    def cohomology_frame(self, max_degree: Optional[int] = None) -> pd.DataFrame:
        top = max(self.cohomology, default=0) if max_degree is None else max_degree
        columns = ["Grad", "H^n(A_Γ, ℤA_Γ)", "Taggar"]
        rows = []
        for n in range(0, top + 1):
            grp = self.cohomology.get(n, CollapsedGroup())
            rows.append(dict(zip(columns, (n, str(grp), grp.tags()))))
        return pd.DataFrame(rows, columns=columns)

    def verdict_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"Utslag": VERDICT_LABELS[key], "Värde": _fmt_verdict(self.verdicts.get(key))} for key in VERDICT_KEYS],
            columns=["Utslag", "Värde"],
        )


def _fmt_verdict(value) -> str:
    if value is None:
        return "–"
    if isinstance(value, bool):
        return "ja" if value else "nej"
    return str(value)


def build_report(g: Graph, log: LogFn = None) -> Report:
    _log = make_log(log)
    k = flag_complex(g)
    desc = main_theorem_cohomology(g, log=log)
    simplex = is_single_simplex(k)

    verdicts: Dict[str, Optional[object]] = {
        "free_abelian_branch": simplex,
        "free_abelian_rank": free_abelian_rank(g),
        "cohomological_dimension": cohomological_dimension(g),
        "max_acyclicity": None if simplex else acyclic_at_infinity_up_to(g),
        "cohen_macaulay": is_cohen_macaulay(g).holds,
        "duality": is_duality_group(g),
        "duality_dimension": duality_dimension(g),
        "poincare_duality": is_poincare_duality(g),
    }

    rows: List[ProvenanceRow] = []
    for degree in desc.degrees():
        for (grp, mult), prov in zip(desc.per_degree[degree], desc.provenance[degree]):
            lk = link(k, prov.sigma)
            lk_groups = nonzero(reduced_cohomology(lk))
            rows.append(ProvenanceRow(
                sigma=format_simplex(prov.sigma),
                link_f_vector=lk.f_vector(),
                link_cohomology="; ".join(f"H̄^{d} = {h}" for d, h in lk_groups.items()) or "0",
                link_degree=prov.link_degree,
                degree=degree,
                group=f"{grp}×{mult}",
            ))
    _log(f"Rapport: {len(rows)} proveniensrader, cd = {verdicts['cohomological_dimension']}.")
    return Report(
        vertices=tuple(format_vertex(v) for v in g.vertices),
        edges=tuple((format_vertex(a), format_vertex(b)) for a, b in g.sorted_edges()),
        f_vector=k.f_vector(),
        cohomology=desc.canonical(),
        verdicts=verdicts,
        provenance=tuple(rows),
    )


def render_text(report: Report, max_degree: Optional[int] = None) -> str:
    out = []
    out.append(f"Graf: {len(report.vertices)} hörn, {len(report.edges)} kanter")
    if report.edges:
        out.append("  Kanter: " + " ".join(f"{a}-{b}" for a, b in report.edges))
    out.append(f"Flaggkomplex f-vektor: {report.f_vector}")
    if report.free_abelian_branch:
        out.append(f"Fri abelsk gren: A_Γ = ℤ^{report.verdicts['free_abelian_rank']}, "
                   f"H^* är ℤ i toppgraden {report.verdicts['cohomological_dimension']}.")
    out.append("")
    out.append(report.cohomology_frame(max_degree).to_string(index=False))
    out.append("")
    out.append(report.verdict_frame().to_string(index=False))
    if report.provenance:
        out.append("")
        out.append("Proveniens:")
        out.append(report.provenance_frame().to_string(index=False))
    return "\n".join(out) + "\n"

# io/schemas.py
from typing import Dict, List

# Radnyckelord i graffiler; första kolumnen matchas skiftlägesokänsligt
GRAPH_FILE_SCHEMA: Dict[str, List[str]] = {
    "vertex": ["v", "vertex", "hörn", "node"],
    "edge":   ["e", "edge", "kant"],
}

COMMENT_PREFIX = "#"

# Rapportens JSON-nycklar, i den ordning de skrivs
REPORT_KEYS: List[str] = ["graph", "f_vector", "cohomology", "verdicts", "provenance"]

VERDICT_KEYS: List[str] = [
    "free_abelian_branch",
    "free_abelian_rank",
    "cohomological_dimension",
    "max_acyclicity",
    "cohen_macaulay",
    "duality",
    "duality_dimension",
    "poincare_duality",
]

PROVENANCE_KEYS: List[str] = ["sigma", "link_f_vector", "link_cohomology", "link_degree", "degree", "group"]

# Tabellrubriker i textrapporten och i Excel-bladen
PROVENANCE_COLUMNS: Dict[str, str] = {
    "sigma":           "σ",
    "link_f_vector":   "f(Lk σ)",
    "link_cohomology": "H̄^*(Lk σ)",
    "link_degree":     "Länkgrad",
    "degree":          "Grad",
    "group":           "Summand",
}

VERDICT_LABELS: Dict[str, str] = {
    "free_abelian_branch":     "Fri abelsk gren",
    "free_abelian_rank":       "Rang (fri abelsk)",
    "cohomological_dimension": "Kohomologisk dimension",
    "max_acyclicity":          "Max n (n-acyklisk i oändligheten)",
    "cohen_macaulay":          "Cohen–Macaulay",
    "duality":                 "Dualitetsgrupp",
    "duality_dimension":       "Dualitetsdimension",
    "poincare_duality":        "Poincarédualitetsgrupp",
}

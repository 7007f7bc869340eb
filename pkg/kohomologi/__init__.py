"""H^*(A_Γ, ℤA_Γ) för rätvinkliga Artingrupper, beräknat från flaggkomplexets länkar."""
__version__ = "1.0.0"

from .logic import (
    Graph,
    flag_complex,
    preset_graph,
    main_theorem_cohomology,
    build_report,
)
from .io import parse_graph, read_graph_file, serialize_graph

__all__ = [
    "__version__",
    "Graph",
    "flag_complex",
    "preset_graph",
    "main_theorem_cohomology",
    "build_report",
    "parse_graph",
    "read_graph_file",
    "serialize_graph",
]

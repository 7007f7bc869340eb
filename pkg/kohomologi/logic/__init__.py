from .complexes import (
    Graph,
    GraphError,
    SimplexError,
    SimplicialComplex,
    flag_complex,
    simplices,
    link,
    star,
    full_subcomplex,
    deleted_complex,
    mirror_union,
    double_graph,
    barycentric_subdivision,
    one_skeleton,
    is_flag,
    is_single_simplex,
)
from .presets import PresetError, preset_graph
from .homology import (
    FinitelyGeneratedAbelianGroup,
    reduced_cohomology,
    relative_cohomology,
    smith_normal_form,
)
from .mirrors import (
    OracleTooLargeError,
    mirror_complex,
    davis_formula_groups,
    lemma_formula_groups,
    double_link_bijection,
)
from .formula import (
    SingleSimplexError,
    OracleMismatchError,
    main_theorem_cohomology,
    cohomological_dimension,
    check_acyclic_at_infinity,
    acyclic_at_infinity_up_to,
    is_cohen_macaulay,
    is_duality_group,
    is_poincare_duality,
)
from .validation import CorpusBoundError, validate_graph, run_corpus
from .report import Report, build_report, render_text

__all__ = [
    "Graph", "GraphError", "SimplexError", "SimplicialComplex",
    "flag_complex", "simplices", "link", "star", "full_subcomplex", "deleted_complex", "mirror_union",
    "double_graph", "barycentric_subdivision", "one_skeleton", "is_flag", "is_single_simplex",
    "PresetError", "preset_graph",
    "FinitelyGeneratedAbelianGroup", "reduced_cohomology", "relative_cohomology", "smith_normal_form",
    "OracleTooLargeError", "mirror_complex", "davis_formula_groups", "lemma_formula_groups",
    "double_link_bijection",
    "SingleSimplexError", "OracleMismatchError", "main_theorem_cohomology", "cohomological_dimension",
    "check_acyclic_at_infinity", "acyclic_at_infinity_up_to", "is_cohen_macaulay", "is_duality_group",
    "is_poincare_duality",
    "CorpusBoundError", "validate_graph", "run_corpus",
    "Report", "build_report", "render_text",
]

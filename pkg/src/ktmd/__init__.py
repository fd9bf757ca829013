"""Minimum generator machinery for graphs under truncated distances.

The public surface re-exports the graph constructors, the metric engine,
the solvers, and the closed-form oracle.
"""

from .errors import (
    BudgetExceeded,
    DisconnectedInput,
    EdgeListFormatError,
    EqualVertices,
    FamilySizeMismatch,
    InapplicableInputs,
    IndexOutOfRange,
    InvalidK,
    InvalidOrder,
    KtmdError,
    NotABasis,
    NotAGenerator,
    OracleLimitExceeded,
    RadiusOutOfRange,
    SelfLoop,
    TooSmall,
)
from .gadget import GadgetLayout, ReductionLayout, gadget_H, gadget_order, reduction_graph
from .graphs import (
    Graph,
    ball,
    corona,
    family_member,
    family_universe_size,
    free_pairs,
    generate,
    join,
    lexicographic,
    new_graph,
    read_edge_list,
    write_edge_list,
)
from .metric import (
    DistanceMatrix,
    PairTable,
    critical_union,
    diameter,
    distance_matrix,
    distinguishing_set,
    min_distinguishing_number,
    pair_table,
    truncated_distance,
    twin_classes,
)
from .oracle import (
    CheckLine,
    CheckReport,
    GadgetPrediction,
    Prediction,
    check_common_generator,
    check_corona_theorem,
    check_lexicographic_theorem,
    check_reduction_identity,
    example_basis_config,
    predict_dimension,
    predict_dimensional,
    predict_gadget,
    suite_tags,
    verification_suite,
)
from .sets import VertexSet
from .solver import (
    DimensionResult,
    SearchStats,
    SolverConfig,
    Status,
    brute_force_dimension,
    dimension_profile,
    exact_dimension,
    forced_vertices,
    greedy_generator,
    is_generator,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CheckLine", "CheckReport", "DimensionResult",
    "DisconnectedInput", "DistanceMatrix", "EdgeListFormatError",
    "EqualVertices", "FamilySizeMismatch", "GadgetLayout", "GadgetPrediction",
    "Graph", "InapplicableInputs", "IndexOutOfRange", "InvalidK",
    "InvalidOrder", "KtmdError", "NotABasis", "NotAGenerator",
    "OracleLimitExceeded", "PairTable", "Prediction", "RadiusOutOfRange",
    "ReductionLayout", "SearchStats", "SelfLoop", "SolverConfig", "Status",
    "TooSmall", "VertexSet", "ball", "brute_force_dimension",
    "check_common_generator", "check_corona_theorem",
    "check_lexicographic_theorem", "check_reduction_identity", "corona",
    "critical_union", "diameter", "dimension_profile", "distance_matrix",
    "distinguishing_set", "exact_dimension", "example_basis_config",
    "family_member", "family_universe_size", "forced_vertices", "free_pairs",
    "gadget_H", "gadget_order", "generate", "greedy_generator", "is_generator",
    "join", "lexicographic", "min_distinguishing_number", "new_graph",
    "pair_table", "predict_dimension", "predict_dimensional", "predict_gadget",
    "read_edge_list", "reduction_graph", "suite_tags", "truncated_distance",
    "twin_classes", "verification_suite", "write_edge_list",
]

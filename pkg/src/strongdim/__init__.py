"""Strong metric dimension toolkit.

Computes strong resolving graphs and strong metric dimension (exhaustively
and through the minimum-vertex-cover reduction), and verifies the known
closed forms for generalized Jahangir graphs against those computations.
"""

from .graphs import (
    UNREACHABLE,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    ParseError,
    SizeLimitError,
    all_pairs_distances,
    build_graph,
    complete_graph,
    cycle_graph,
    diameter,
    is_connected,
    parse,
    path_graph,
    serialize,
)
from .jahangir import (
    Discrepancy,
    JahangirLabeling,
    JahangirParams,
    VerificationReport,
    build_jahangir,
    extremal_distance_pairs,
    measured_distance_pairs,
    predicted_cover_even,
    predicted_cover_odd,
    predicted_srg_edges_even,
    predicted_srg_edges_odd,
    sdim_formula,
    srg_edge_families_even,
    srg_edge_families_odd,
    verify_predictions,
)
from .strong_metric import (
    InternalInconsistencyError,
    MmdPairSet,
    StrongBasisResult,
    brute_force_sdim,
    is_maximally_distant,
    is_strong_resolving_set,
    mmd_pairs,
    sdim_via_cover,
    strong_resolving_graph,
    strongly_resolves,
)
from .vertex_cover import (
    CoverResult,
    exact_min_vertex_cover,
    greedy_cover,
    is_vertex_cover,
    matching_lower_bound,
    max_independent_set,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "CoverResult",
    "DisconnectedGraphError",
    "Discrepancy",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "InternalInconsistencyError",
    "JahangirLabeling",
    "JahangirParams",
    "MmdPairSet",
    "ParseError",
    "SizeLimitError",
    "StrongBasisResult",
    "VerificationReport",
    "all_pairs_distances",
    "build_graph",
    "build_jahangir",
    "brute_force_sdim",
    "complete_graph",
    "cycle_graph",
    "diameter",
    "exact_min_vertex_cover",
    "extremal_distance_pairs",
    "greedy_cover",
    "is_connected",
    "is_maximally_distant",
    "is_strong_resolving_set",
    "is_vertex_cover",
    "matching_lower_bound",
    "max_independent_set",
    "measured_distance_pairs",
    "mmd_pairs",
    "parse",
    "path_graph",
    "predicted_cover_even",
    "predicted_cover_odd",
    "predicted_srg_edges_even",
    "predicted_srg_edges_odd",
    "sdim_formula",
    "sdim_via_cover",
    "serialize",
    "srg_edge_families_even",
    "srg_edge_families_odd",
    "strong_resolving_graph",
    "strongly_resolves",
    "verify_predictions",
]

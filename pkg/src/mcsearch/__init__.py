"""Exact enumeration of maximum common subgraphs across labeled graphs.

The engine finds all maximum common subgraphs (vertex- or edge-maximal,
optionally connected, optionally label-preserving) of two or more graphs
by iterating pairwise modular products and enumerating maximal type-1
connected cliques, with similarity-driven input ordering and search-space
pruning to keep the search practical.
"""

from .graph_core import (
    UNLABELED,
    CanonicalForm,
    GraphError,
    LabeledGraph,
    LineGraphResult,
    canonical,
    connected_components,
    induced_subgraph,
    line_graph,
)
from .product import (
    TYPE0,
    TYPE1,
    ProductGraph,
    modular_product,
    project,
    prune_type0_edges,
    type_a_components,
)
from .clique import (
    Clique,
    backend_name,
    enumerate_maximal_cliques,
    enumerate_maximal_connected_cliques,
)
from .solver import (
    CandidateSet,
    EmbeddingResult,
    SolveConfig,
    SolveError,
    SolveTimeout,
    initial_candidates,
    repair_bad_triangles,
    solve,
    solve_detailed,
    solve_with_bound,
    step,
)
from .similarity import (
    MEASURES,
    Ordering,
    SimilarityMatrix,
    greedy_order,
    minmax_similarity,
    nspd_kernel,
    similarity_matrix,
    vh_kernel,
    wl_oa_kernel,
)
from .oracle import (
    OracleResult,
    SizeLimitError,
    oracle_maximal_cliques,
    oracle_mecs,
    oracle_mvcs,
)

__version__ = "0.1.0"

__all__ = [
    "UNLABELED", "CanonicalForm", "GraphError", "LabeledGraph",
    "LineGraphResult", "canonical", "connected_components",
    "induced_subgraph", "line_graph",
    "TYPE0", "TYPE1", "ProductGraph", "modular_product", "project",
    "prune_type0_edges", "type_a_components",
    "Clique", "backend_name", "enumerate_maximal_cliques",
    "enumerate_maximal_connected_cliques",
    "CandidateSet", "EmbeddingResult", "SolveConfig", "SolveError",
    "SolveTimeout", "initial_candidates", "repair_bad_triangles",
    "solve", "solve_detailed", "solve_with_bound", "step",
    "MEASURES", "Ordering", "SimilarityMatrix", "greedy_order",
    "minmax_similarity", "nspd_kernel", "similarity_matrix", "vh_kernel",
    "wl_oa_kernel",
    "OracleResult", "SizeLimitError", "oracle_maximal_cliques",
    "oracle_mecs", "oracle_mvcs",
    "__version__",
]

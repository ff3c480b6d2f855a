"""Minimum edge augmentation making a tree 3-vertex-connected.

Public surface: graph/tree types and connectivity checks, the
augmentation algorithms, the brute-force oracle, and deterministic tree
generators.  The hot kernels run in a compiled extension when available
(`triaug.BACKEND` reports which one is active).
"""

from ._backend import BACKEND
from .augment import (
    AugmentationResult,
    augmented_graph,
    greedy_cross_branch_matching,
    lower_bound,
    non_path_augmentation,
    path_augmentation,
    tri_augment,
)
from .connectivity import (
    is_connected_after_removal,
    is_k_connected,
    vertex_connectivity,
)
from .errors import (
    BudgetError,
    ContractViolationError,
    DuplicateEdgeError,
    GraphInputError,
    NotATreeError,
    SelfLoopError,
    TriaugError,
    VerificationError,
    VertexRangeError,
)
from .gen import SplitMix64, TreeGenSpec, generate, prufer_decode, prufer_encode
from .graph import (
    Graph,
    RootedDecoration,
    Tree,
    decorate,
    graph_from_edges,
    is_ancestor,
    validate_tree,
)
from .oracle import (
    OracleResult,
    degree_deficiency_bound,
    enumerate_labeled_trees,
    min_augmentation_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentationResult",
    "BACKEND",
    "BudgetError",
    "ContractViolationError",
    "DuplicateEdgeError",
    "Graph",
    "GraphInputError",
    "NotATreeError",
    "OracleResult",
    "RootedDecoration",
    "SelfLoopError",
    "SplitMix64",
    "Tree",
    "TreeGenSpec",
    "TriaugError",
    "VerificationError",
    "VertexRangeError",
    "augmented_graph",
    "decorate",
    "degree_deficiency_bound",
    "enumerate_labeled_trees",
    "generate",
    "graph_from_edges",
    "greedy_cross_branch_matching",
    "is_ancestor",
    "is_connected_after_removal",
    "is_k_connected",
    "lower_bound",
    "min_augmentation_bruteforce",
    "non_path_augmentation",
    "path_augmentation",
    "prufer_decode",
    "prufer_encode",
    "tri_augment",
    "validate_tree",
    "vertex_connectivity",
]

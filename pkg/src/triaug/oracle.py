"""Ground truth by brute force: exhaustive minimum augmentation search and
exhaustive labeled-tree enumeration for small n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from ._backend import kernel
from .connectivity import is_k_connected
from .errors import BudgetError, ContractViolationError, VerificationError
from .gen import prufer_decode
from .graph import Edge, Graph, Tree, graph_from_edges, validate_tree

MAX_ORACLE_N = 8
MAX_ENUM_N = 9


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    witness: tuple[Edge, ...]  # lexicographically first optimal set
    explored: int


def degree_deficiency_bound(g: Graph) -> int:
    """ceil of half the total degree shortfall below 3.

    A valid lower bound for any 3-connectivity augmentation: every vertex
    must reach degree 3 and one edge serves two endpoints.
    """
    deficit = sum(max(0, 3 - g.degree(v)) for v in range(g.n))
    return (deficit + 1) // 2


def min_augmentation_bruteforce(t: Tree) -> OracleResult:
    """Smallest E_ca over all non-edge subsets making T 3-connected.

    Subset sizes are scanned upward starting at the degree-deficiency
    bound; within a size the order is lexicographic over the sorted
    non-edge list, so the witness is deterministic.  Candidate sets that
    leave some vertex below degree 3 are pruned before the connectivity
    check.
    """
    n = t.n
    if n < 4:
        raise ContractViolationError("no 3-connected graph exists on fewer than 4 vertices")
    if n > MAX_ORACLE_N:
        raise BudgetError(f"oracle limited to n <= {MAX_ORACLE_N}, got {n}")

    g = t.graph
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
    ]
    masks = np.zeros(n, dtype=np.uint64)
    for u in range(n):
        for v in g.adjacency[u]:
            masks[u] |= np.uint64(1 << v)
    deg = np.array([g.degree(v) for v in range(n)], dtype=np.int32)
    cu = np.array([u for u, _ in candidates], dtype=np.int32)
    cv = np.array([v for _, v in candidates], dtype=np.int32)

    minimum, witness, explored = kernel.tree_min_augment(
        masks, deg, cu, cv, degree_deficiency_bound(g)
    )
    if minimum < 0:
        raise VerificationError("exhausted all candidate sets without success")
    witness_edges = tuple((int(u), int(v)) for u, v in witness)
    # Never trust the search: re-check the witness through the checker.
    if not is_k_connected(g.with_edges(witness_edges), 3):
        raise VerificationError("oracle witness failed independent re-check")
    return OracleResult(minimum=int(minimum), witness=witness_edges, explored=int(explored))


def enumerate_labeled_trees(n: int) -> Iterator[Tree]:
    """All n^(n-2) labeled trees on 0..n-1, one per Prüfer sequence."""
    if not (2 <= n <= MAX_ENUM_N):
        raise BudgetError(f"tree enumeration limited to 2 <= n <= {MAX_ENUM_N}, got {n}")
    if n == 2:
        yield validate_tree(graph_from_edges(2, [(0, 1)]))
        return
    for seq in product(range(n), repeat=n - 2):
        yield validate_tree(graph_from_edges(n, prufer_decode(seq, n)))

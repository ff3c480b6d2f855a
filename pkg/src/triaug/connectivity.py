"""Vertex-connectivity checks by exhaustive separator enumeration.

For k-connectivity every vertex subset of size < k is removed and the
remainder BFS-checked; for k = 3 this is all single vertices and all
pairs, O(n^2 (n + m)) total.  The inner loop runs in the compiled kernel
when available.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from ._backend import BACKEND, kernel
from .errors import VertexRangeError
from .graph import Graph

__all__ = [
    "BACKEND",
    "is_connected_after_removal",
    "is_k_connected",
    "vertex_connectivity",
]


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.fromiter(
        (v for u in range(g.n) for v in g.adjacency[u]),
        dtype=np.int32,
        count=2 * g.m,
    )
    return indptr, indices


def is_connected_after_removal(g: Graph, s: Iterable[int]) -> bool:
    """True iff g minus the vertex set s has at most one component."""
    removed = set(s)
    for v in removed:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"vertex {v} out of range 0..{g.n - 1}")
    remaining = g.n - len(removed)
    if remaining == 0:
        return True
    start = next(v for v in range(g.n) if v not in removed)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in removed and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == remaining


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff n > k and no vertex subset of size < k disconnects g."""
    if g.n <= k:
        return False
    if k <= 0:
        return True
    indptr, indices = _csr(g)
    return bool(kernel.csr_is_k_connected(indptr, indices, g.n, k))


def vertex_connectivity(g: Graph) -> int:
    """kappa(g): the largest k for which g is k-connected (n-1 for K_n).

    Exhaustive; intended for small graphs (n up to ~20).
    """
    k = 0
    while is_k_connected(g, k + 1):
        k += 1
    return k

"""Pure-Python fallback for the compiled kernels.

Mirrors the semantics of `_speedups` exactly, including enumeration order
and the `explored` counter, so both backends are interchangeable.  Used
when the extension is unavailable or when TRIAUG_PURE is set.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations


def csr_is_k_connected(indptr, indices, n: int, k: int) -> bool:
    """True iff no vertex subset of size < k disconnects the CSR graph."""
    if n <= k:
        return False
    if k <= 0:
        return True
    indptr = list(indptr)
    indices = list(indices)
    adj = [indices[indptr[v]:indptr[v + 1]] for v in range(n)]
    for s in range(k):
        for removed in combinations(range(n), s):
            if not _connected_without(adj, n, set(removed)):
                return False
    return True


def _connected_without(adj, n: int, removed: set[int]) -> bool:
    remaining = n - len(removed)
    if remaining == 0:
        return True
    start = next(v for v in range(n) if v not in removed)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in removed and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == remaining


def tree_min_augment(adj_masks, deg, cu, cv, start_size: int):
    """Exhaustive minimum 3-connectivity augmentation over bitmask graphs.

    adj_masks[v] is the neighbor bitmask of v (n <= 8 intended); (cu[i],
    cv[i]) enumerate the candidate non-edges in lexicographic order.
    Subset sizes are scanned upward from start_size; within a size the
    enumeration is lexicographic, so the first witness found is the
    lexicographically least optimal set.

    Returns (minimum, witness, explored) with witness a list of (u, v)
    pairs, or (-1, None, explored) if no candidate subset works.
    """
    adj_masks = [int(x) for x in adj_masks]
    deg = [int(x) for x in deg]
    cu = [int(x) for x in cu]
    cv = [int(x) for x in cv]
    n = len(adj_masks)
    ncand = len(cu)
    explored = 0
    for size in range(max(start_size, 0), ncand + 1):
        for comb in combinations(range(ncand), size):
            explored += 1
            deg2 = deg[:]
            for i in comb:
                deg2[cu[i]] += 1
                deg2[cv[i]] += 1
            if min(deg2) < 3:
                continue
            adj2 = adj_masks[:]
            for i in comb:
                adj2[cu[i]] |= 1 << cv[i]
                adj2[cv[i]] |= 1 << cu[i]
            if _mask_is_3connected(adj2, n):
                return size, [(cu[i], cv[i]) for i in comb], explored
    return -1, None, explored


def _mask_connected(adj, n: int, alive: int) -> bool:
    if alive == 0:
        return True
    reach = alive & (-alive)
    prev = 0
    while reach != prev:
        prev = reach
        for v in range(n):
            if (reach >> v) & 1:
                reach |= adj[v] & alive
    return reach == alive


def _mask_is_3connected(adj, n: int) -> bool:
    if n <= 3:
        return False
    full = (1 << n) - 1
    if not _mask_connected(adj, n, full):
        return False
    for u in range(n):
        if not _mask_connected(adj, n, full & ~(1 << u)):
            return False
    for u in range(n):
        for v in range(u + 1, n):
            if not _mask_connected(adj, n, full & ~(1 << u) & ~(1 << v)):
                return False
    return True

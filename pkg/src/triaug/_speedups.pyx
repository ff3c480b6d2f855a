# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the separator-enumeration checker and the oracle.

Semantics (enumeration order, explored counter) must stay identical to
`_pykernel`; the backend parity tests compare them directly.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef inline bint _bfs_connected(const int* indptr, const int* indices, int n,
                                int* mark, int* seen, int gen,
                                int* queue, int removed) noexcept:
    # Connected check on the graph minus vertices stamped mark[v] == gen.
    cdef int remaining = n - removed
    cdef int start = -1
    cdef int head = 0, tail = 0, count = 0
    cdef int u, v, j
    if remaining == 0:
        return True
    for v in range(n):
        if mark[v] != gen:
            start = v
            break
    seen[start] = gen
    queue[tail] = start
    tail += 1
    count = 1
    while head < tail:
        u = queue[head]
        head += 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if mark[v] != gen and seen[v] != gen:
                seen[v] = gen
                count += 1
                queue[tail] = v
                tail += 1
    return count == remaining


def csr_is_k_connected(int[::1] indptr, int[::1] indices, int n, int k):
    """True iff no vertex subset of size < k disconnects the CSR graph."""
    if n <= k:
        return False
    if k <= 0:
        return True
    cdef int* comb = <int*> malloc(k * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    cdef int* mark = <int*> malloc(n * sizeof(int))
    cdef int* seen = <int*> malloc(n * sizeof(int))
    if comb == NULL or queue == NULL or mark == NULL or seen == NULL:
        free(comb); free(queue); free(mark); free(seen)
        raise MemoryError()
    memset(mark, 0, n * sizeof(int))
    memset(seen, 0, n * sizeof(int))
    cdef int gen = 0
    cdef int s, i, j
    cdef bint ok = True
    cdef const int* ip = &indptr[0]
    cdef const int* ix = &indices[0]
    try:
        for s in range(k):
            if s == 0:
                gen += 1
                if not _bfs_connected(ip, ix, n, mark, seen, gen, queue, 0):
                    ok = False
                    break
                continue
            for i in range(s):
                comb[i] = i
            while True:
                gen += 1
                for i in range(s):
                    mark[comb[i]] = gen
                if not _bfs_connected(ip, ix, n, mark, seen, gen, queue, s):
                    ok = False
                    break
                i = s - 1
                while i >= 0 and comb[i] == n - s + i:
                    i -= 1
                if i < 0:
                    break
                comb[i] += 1
                for j in range(i + 1, s):
                    comb[j] = comb[j - 1] + 1
            if not ok:
                break
        return ok
    finally:
        free(comb); free(queue); free(mark); free(seen)


cdef inline bint _mask_connected(const unsigned long long* adj, int n,
                                 unsigned long long alive) noexcept:
    cdef unsigned long long reach, prev
    cdef int v
    if alive == 0:
        return True
    reach = alive & (~alive + 1)
    prev = 0
    while reach != prev:
        prev = reach
        for v in range(n):
            if (reach >> v) & 1:
                reach |= adj[v] & alive
    return reach == alive


cdef inline bint _mask_is_3connected(const unsigned long long* adj, int n) noexcept:
    cdef unsigned long long full = (<unsigned long long> 1 << n) - 1
    cdef int u, v
    if n <= 3:
        return False
    if not _mask_connected(adj, n, full):
        return False
    for u in range(n):
        if not _mask_connected(adj, n, full & ~(<unsigned long long> 1 << u)):
            return False
    for u in range(n):
        for v in range(u + 1, n):
            if not _mask_connected(
                adj, n,
                full & ~(<unsigned long long> 1 << u) & ~(<unsigned long long> 1 << v),
            ):
                return False
    return True


def tree_min_augment(unsigned long long[::1] adj_masks, int[::1] deg,
                     int[::1] cu, int[::1] cv, int start_size):
    """Exhaustive minimum 3-connectivity augmentation over bitmask graphs.

    Same contract as `_pykernel.tree_min_augment`: sizes ascending from
    start_size, lexicographic within a size, candidates below minimum
    degree 3 skipped before the connectivity check.
    """
    cdef int n = adj_masks.shape[0]
    cdef int ncand = cu.shape[0]
    cdef unsigned long long explored = 0
    cdef int size, i, j, v
    cdef bint ok
    if n > 64:
        raise ValueError("bitmask kernel limited to 64 vertices")
    cdef int* comb = <int*> malloc((ncand if ncand > 0 else 1) * sizeof(int))
    cdef int* deg2 = <int*> malloc(n * sizeof(int))
    cdef unsigned long long* adj2 = <unsigned long long*> malloc(
        n * sizeof(unsigned long long))
    if comb == NULL or deg2 == NULL or adj2 == NULL:
        free(comb); free(deg2); free(adj2)
        raise MemoryError()
    if start_size < 0:
        start_size = 0
    try:
        for size in range(start_size, ncand + 1):
            if size == 0:
                explored += 1
                for v in range(n):
                    adj2[v] = adj_masks[v]
                if _mask_is_3connected(adj2, n):
                    return 0, [], explored
                continue
            for i in range(size):
                comb[i] = i
            while True:
                explored += 1
                for v in range(n):
                    deg2[v] = deg[v]
                for i in range(size):
                    deg2[cu[comb[i]]] += 1
                    deg2[cv[comb[i]]] += 1
                ok = True
                for v in range(n):
                    if deg2[v] < 3:
                        ok = False
                        break
                if ok:
                    for v in range(n):
                        adj2[v] = adj_masks[v]
                    for i in range(size):
                        adj2[cu[comb[i]]] |= <unsigned long long> 1 << cv[comb[i]]
                        adj2[cv[comb[i]]] |= <unsigned long long> 1 << cu[comb[i]]
                    if _mask_is_3connected(adj2, n):
                        return (size,
                                [(cu[comb[i]], cv[comb[i]]) for i in range(size)],
                                explored)
                i = size - 1
                while i >= 0 and comb[i] == ncand - size + i:
                    i -= 1
                if i < 0:
                    break
                comb[i] += 1
                for j in range(i + 1, size):
                    comb[j] = comb[j - 1] + 1
        return -1, None, explored
    finally:
        free(comb); free(deg2); free(adj2)

#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the separator-enumeration 3-connectivity check on augmented random
trees and the brute-force minimum-augmentation search on small trees.

Usage: python benchmarks/bench_backends.py
"""

import time

import numpy as np

from triaug import TreeGenSpec, augmented_graph, generate, tri_augment
from triaug import _pykernel
from triaug.connectivity import _csr

try:
    from triaug import _speedups
except ImportError:
    _speedups = None


def time_call(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_checker():
    print("3-connectivity check (all single- and pair-removals + BFS)")
    print(f"{'n':>6} {'pure (s)':>12} {'compiled (s)':>14} {'speedup':>9}")
    for n in (30, 60, 90, 120):
        t = generate(TreeGenSpec("random", n, seed=7))
        h = augmented_graph(t, tri_augment(t))
        indptr, indices = _csr(h)
        t_pure = time_call(lambda: _pykernel.csr_is_k_connected(indptr, indices, n, 3))
        if _speedups is None:
            print(f"{n:>6} {t_pure:>12.4f} {'(missing)':>14} {'-':>9}")
            continue
        t_fast = time_call(lambda: _speedups.csr_is_k_connected(indptr, indices, n, 3))
        print(f"{n:>6} {t_pure:>12.4f} {t_fast:>14.6f} {t_pure / t_fast:>8.1f}x")


def bench_oracle():
    print("\nbrute-force minimum augmentation search (n = 7 path)")
    n = 7
    t = generate(TreeGenSpec("path", n))
    g = t.graph
    masks = np.zeros(n, dtype=np.uint64)
    for u in range(n):
        for v in g.adjacency[u]:
            masks[u] |= np.uint64(1 << v)
    deg = np.array([g.degree(v) for v in range(n)], dtype=np.int32)
    cand = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    cu = np.array([u for u, _ in cand], dtype=np.int32)
    cv = np.array([v for _, v in cand], dtype=np.int32)

    t_pure = time_call(lambda: _pykernel.tree_min_augment(masks, deg, cu, cv, 0))
    print(f"pure:     {t_pure:.4f} s")
    if _speedups is None:
        print("compiled: (missing)")
        return
    t_fast = time_call(lambda: _speedups.tree_min_augment(masks, deg, cu, cv, 0))
    print(f"compiled: {t_fast:.6f} s  ({t_pure / t_fast:.1f}x)")
    assert _speedups.tree_min_augment(masks, deg, cu, cv, 0)[0] == _pykernel.tree_min_augment(
        masks, deg, cu, cv, 0
    )[0]


if __name__ == "__main__":
    bench_checker()
    bench_oracle()

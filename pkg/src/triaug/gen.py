"""Deterministic tree generators.

Random trees are drawn as uniform Prüfer sequences from SplitMix64 with
rejection sampling, so a (shape, n, seed) triple yields the same tree in
any implementation of the same PRNG (constants documented in the README).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphInputError
from .graph import Edge, Tree, graph_from_edges, validate_tree

SHAPES = ("path", "star", "spider", "caterpillar", "random")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG (Steele et al.); tiny, portable, and well specified."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform draw from 0..n-1 via rejection below the last multiple of n."""
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


def prufer_decode(seq: Sequence[int], n: int) -> list[Edge]:
    """Edges of the labeled tree on 0..n-1 encoded by the Prüfer sequence."""
    if n < 2:
        raise GraphInputError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise GraphInputError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for a in seq:
        if not (0 <= a < n):
            raise GraphInputError(f"Prüfer entry {a} out of range 0..{n - 1}")
        degree[a] += 1
    edges: list[Edge] = []
    # Classic O(n) pointer scan: `leaf` chases the smallest current leaf.
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for a in seq:
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1 and a < ptr:
            leaf = a
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_encode(edges: Iterable[Edge], n: int) -> tuple[int, ...]:
    """Prüfer sequence of the labeled tree given by `edges` (inverse of decode)."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    degree = [len(a) for a in adj]
    seq: list[int] = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(n - 2):
        (parent,) = adj[leaf]
        seq.append(parent)
        adj[parent].discard(leaf)
        degree[parent] -= 1
        if degree[parent] == 1 and parent < ptr:
            leaf = parent
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    return tuple(seq)


@dataclass(frozen=True)
class TreeGenSpec:
    """Parameters for one generated tree family."""

    shape: str
    n: int
    seed: int = 0
    spine: int | None = None  # caterpillar only
    legs: int | None = None  # spider only


def generate(spec: TreeGenSpec) -> Tree:
    """Build the tree described by `spec`; deterministic for a fixed spec."""
    if spec.shape not in SHAPES:
        raise GraphInputError(f"unknown shape {spec.shape!r}, expected one of {SHAPES}")
    n = spec.n
    if n < 2:
        raise GraphInputError(f"need n >= 2, got {n}")
    if spec.shape == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.shape == "star":
        edges = [(0, i) for i in range(1, n)]
    elif spec.shape == "spider":
        edges = _spider_edges(n, spec.legs if spec.legs is not None else 3)
    elif spec.shape == "caterpillar":
        spine = spec.spine if spec.spine is not None else max(2, n // 2)
        edges = _caterpillar_edges(n, spine)
    else:  # random
        if n == 2:
            edges = [(0, 1)]
        else:
            rng = SplitMix64(spec.seed)
            seq = [rng.randbelow(n) for _ in range(n - 2)]
            edges = prufer_decode(seq, n)
    return validate_tree(graph_from_edges(n, edges))


def _spider_edges(n: int, legs: int) -> list[Edge]:
    """Center 0 with `legs` paths of near-equal length hanging off it."""
    if legs < 3:
        raise GraphInputError("spider needs at least 3 legs")
    if n < legs + 1:
        raise GraphInputError(f"spider with {legs} legs needs n >= {legs + 1}")
    base, extra = divmod(n - 1, legs)
    edges: list[Edge] = []
    nxt = 1
    for i in range(legs):
        prev = 0
        for _ in range(base + (1 if i < extra else 0)):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges


def _caterpillar_edges(n: int, spine: int) -> list[Edge]:
    """Spine path 0..spine-1 with the remaining leaves attached round-robin."""
    if not (1 <= spine <= n):
        raise GraphInputError(f"caterpillar spine must be in 1..{n}, got {spine}")
    edges: list[Edge] = [(i, i + 1) for i in range(spine - 1)]
    for j in range(spine, n):
        edges.append(((j - spine) % spine, j))
    return edges

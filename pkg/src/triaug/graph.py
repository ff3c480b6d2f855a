"""Immutable graph and rooted-tree representations.

All graphs are simple and undirected over contiguous integer vertex ids
0..n-1.  Every value here is frozen after construction, so instances can be
shared freely across threads and workers.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    ContractViolationError,
    DuplicateEdgeError,
    NotATreeError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex sorted neighbor tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.adjacency[u]
        i = bisect_left(adj, v)
        return i < len(adj) and adj[i] == v

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        """New graph with `extra` added; rejects duplicates and loops."""
        return graph_from_edges(self.n, list(self.edges()) + list(extra))

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a validated Graph from an edge list over ids 0..n-1."""
    if n < 1:
        raise VertexRangeError(f"vertex count must be positive, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
        m += 1
    return Graph(n=n, adjacency=tuple(tuple(sorted(a)) for a in adj), m=m)


@dataclass(frozen=True)
class Tree:
    """A validated tree together with its cached degree profile."""

    graph: Graph
    d1: tuple[int, ...]  # degree-1 vertices, ascending
    d2: tuple[int, ...]  # degree-2 vertices, ascending
    l1: int
    l2: int
    is_path: bool

    @property
    def n(self) -> int:
        return self.graph.n


def validate_tree(g: Graph) -> Tree:
    """Check that g is connected and acyclic; reject anything else."""
    if g.m != g.n - 1:
        raise NotATreeError(f"tree on {g.n} vertices needs {g.n - 1} edges, got {g.m}")
    if not _is_connected(g):
        raise NotATreeError("graph is disconnected")
    d1 = tuple(v for v in range(g.n) if g.degree(v) == 1)
    d2 = tuple(v for v in range(g.n) if g.degree(v) == 2)
    return Tree(
        graph=g,
        d1=d1,
        d2=d2,
        l1=len(d1),
        l2=len(d2),
        is_path=g.max_degree <= 2,
    )


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.n


@dataclass(frozen=True)
class RootedDecoration:
    """BFS rooting of a non-path tree.

    The root is a maximum-degree vertex (smallest id on ties) and BFS
    expands children in ascending id order, so every derived ordering is
    deterministic.  `tin`/`tout` are DFS entry/exit stamps used for O(1)
    ancestry queries.
    """

    root: int
    parent: tuple[int, ...]  # -1 for the root
    level: tuple[int, ...]
    level_order: tuple[int, ...]
    leaf_order: tuple[int, ...]
    w_order: tuple[int, ...]
    tin: tuple[int, ...] = field(repr=False)
    tout: tuple[int, ...] = field(repr=False)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u lies on the root-to-v path (u == v counts)."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def branch_leaves(self, u: int) -> frozenset[int]:
        """Leaf ids in the subtree rooted at u."""
        return frozenset(v for v in self.leaf_order if self.is_ancestor(u, v))


def decorate(t: Tree) -> RootedDecoration:
    """Root a non-path tree and compute its BFS orderings."""
    if t.is_path:
        raise ContractViolationError("decorate requires a non-path tree")
    g = t.graph
    n = g.n
    maxdeg = g.max_degree
    root = min(v for v in range(n) if g.degree(v) == maxdeg)

    parent = [-1] * n
    level = [0] * n
    order: list[int] = [root]
    seen = bytearray(n)
    seen[root] = 1
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:  # ascending by construction
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                level[v] = level[u] + 1
                order.append(v)
                queue.append(v)

    leaf_order = tuple(v for v in order if g.degree(v) == 1)
    w_order = tuple(v for v in order if g.degree(v) == 2)

    # Iterative DFS for ancestry stamps; child order does not matter here.
    tin = [0] * n
    tout = [0] * n
    clock = 0
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        u, done = stack.pop()
        if done:
            tout[u] = clock
            clock += 1
            continue
        tin[u] = clock
        clock += 1
        stack.append((u, True))
        for v in g.adjacency[u]:
            if v != parent[u]:
                stack.append((v, False))

    return RootedDecoration(
        root=root,
        parent=tuple(parent),
        level=tuple(level),
        level_order=tuple(order),
        leaf_order=leaf_order,
        w_order=w_order,
        tin=tuple(tin),
        tout=tuple(tout),
    )


def is_ancestor(d: RootedDecoration, u: int, v: int) -> bool:
    """Module-level alias for RootedDecoration.is_ancestor."""
    return d.is_ancestor(u, v)

"""Minimum tri-connectivity augmentation of trees.

Two constructions, dispatched on the shape of the input: paths become a
cycle plus half-length chords; non-path trees are rooted at a maximum
degree vertex, degree-2 vertices are greedily paired across branches, and
the leftovers are wired into a cycle or path over the leaves.  Both add
exactly ceil((2*l1 + l2) / 2) edges, which matches the degree lower bound,
and the result is 3-vertex-connected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import is_k_connected
from .errors import ContractViolationError, VerificationError
from .graph import Edge, Graph, RootedDecoration, Tree, decorate

CASE_PATH_EVEN = "path-even-n"
CASE_PATH_ODD = "path-odd-n"
CASE_A_EMPTY = "nonpath-A-empty"
CASE_A_EVEN = "nonpath-A-even"
CASE_A_ODD = "nonpath-A-odd"


@dataclass(frozen=True)
class AugmentationResult:
    """Augmented edge set plus the bookkeeping behind it."""

    edges: tuple[Edge, ...]  # in augmentation order
    bound: int
    case_taken: str
    matched_pairs: tuple[Edge, ...]
    residual_chain: tuple[int, ...]


def lower_bound(t: Tree) -> int:
    """ceil((2*l1 + l2) / 2): minimum edges any 3-connectivity augmentation needs.

    Each leaf must gain degree 2 and each degree-2 vertex degree 1, and an
    edge serves at most two deficient endpoints.
    """
    return (2 * t.l1 + t.l2 + 1) // 2


def path_augmentation(t: Tree) -> AugmentationResult:
    """Augment a path: close the cycle, then add half-length chords.

    Walking v_1..v_n along the path (v_1 the smaller-id endpoint), the
    cycle edge {v_1, v_n} is added first; then each v_i with live degree 2,
    i <= ceil(n/2), gets the chord {v_i, v_{floor(n/2)+i}}; for odd n the
    far endpoint picks up one last chord.
    """
    n = t.n
    if not t.is_path or n < 4:
        raise ContractViolationError("path_augmentation needs a path with n >= 4")
    order = _path_order(t)
    pos = {v: i for i, v in enumerate(order)}  # 0-based position along the path
    deg = [t.graph.degree(v) for v in range(n)]
    edges: list[Edge] = []

    def add(u: int, v: int) -> None:
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1

    add(order[0], order[n - 1])
    half = n // 2
    for i in range(1, n // 2 + n % 2 + 1):  # i = 1 .. ceil(n/2)
        u = order[i - 1]
        if deg[u] == 2:
            add(u, order[half + i - 1])
    if deg[order[n - 1]] == 2:  # only possible for odd n
        add(order[n - 1], order[half])

    case = CASE_PATH_EVEN if n % 2 == 0 else CASE_PATH_ODD
    return _finish(t, edges, case, (), ())


def _path_order(t: Tree) -> list[int]:
    """Vertices of a path tree in walk order, starting at the smaller endpoint."""
    start = min(t.d1)
    order = [start]
    prev = -1
    cur = start
    while len(order) < t.n:
        nxt = next(v for v in t.graph.adjacency[cur] if v != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def greedy_cross_branch_matching(
    d: RootedDecoration,
) -> tuple[list[Edge], list[int]]:
    """Pair degree-2 vertices across branches, scanning W in level order.

    Each unmarked w_i is matched to the least-index unmarked w_j (j < i)
    such that neither is an ancestor of the other; both are marked and the
    pair (w_i, w_j) emitted.  The residual list is the unmarked remainder
    in W order; it is always an ancestry chain, since two incomparable
    leftovers would have been matched with each other.
    """
    w = d.w_order
    k = len(w)
    marked = [False] * k
    pairs: list[Edge] = []
    for i in range(k):
        if marked[i]:
            continue
        for j in range(i):
            if marked[j]:
                continue
            if not d.is_ancestor(w[j], w[i]) and not d.is_ancestor(w[i], w[j]):
                pairs.append((w[i], w[j]))
                marked[i] = True
                marked[j] = True
                break
    residual = [w[i] for i in range(k) if not marked[i]]
    return pairs, residual


def non_path_augmentation(t: Tree) -> AugmentationResult:
    """Augment a non-path tree via cross-branch matching plus leaf wiring."""
    if t.is_path:
        raise ContractViolationError("non_path_augmentation needs a non-path tree")
    if t.n < 4:
        raise ContractViolationError("non_path_augmentation needs n >= 4")
    d = decorate(t)
    pairs, chain = greedy_cross_branch_matching(d)
    leaves = d.leaf_order
    l = len(leaves)
    v1, vl = leaves[0], leaves[-1]
    m = len(chain)
    edges: list[Edge] = list(pairs)

    if m == 0:
        case = CASE_A_EMPTY
        edges.append((v1, vl))
        edges.extend((leaves[i], leaves[i + 1]) for i in range(l - 1))
    elif m % 2 == 0:
        case = CASE_A_EVEN
        # {x_j, x_{m+2-j}} for j = 2 .. m/2 (empty when m = 2)
        edges.extend((chain[j - 1], chain[m + 1 - j]) for j in range(2, m // 2 + 1))
        edges.extend((leaves[i], leaves[i + 1]) for i in range(l - 1))
        x1, xmid = chain[0], chain[m // 2]
        # Assign chain endpoints to the path ends so no new edge already
        # exists in the tree; x1 cannot touch a leaf when m >= 2, so one
        # of the two assignments is always free of conflicts.
        if t.graph.has_edge(xmid, vl) or t.graph.has_edge(x1, v1):
            edges.extend([(x1, vl), (xmid, v1)])
        else:
            edges.extend([(x1, v1), (xmid, vl)])
    else:
        case = CASE_A_ODD
        # {x_j, x_{m+1-j}} for j = 1 .. floor(m/2)
        edges.extend((chain[j - 1], chain[m - j]) for j in range(1, m // 2 + 1))
        edges.append((v1, vl))
        edges.extend((leaves[i], leaves[i + 1]) for i in range(l - 1))
        xmid = chain[(m - 1) // 2]
        if t.graph.has_edge(xmid, vl):
            edges.append((xmid, v1))
        else:
            edges.append((xmid, vl))

    return _finish(t, edges, case, tuple(pairs), tuple(chain))


def tri_augment(t: Tree, verify: bool = False) -> AugmentationResult:
    """Dispatch on shape; optionally verify 3-connectivity of the result.

    Verification is exhaustive (all single and pair removals) and
    dominates runtime for large n, hence off by default.
    """
    if t.n < 4:
        raise ContractViolationError(
            "no simple 3-connected graph exists on fewer than 4 vertices"
        )
    result = path_augmentation(t) if t.is_path else non_path_augmentation(t)
    if verify:
        h = augmented_graph(t, result)
        if not is_k_connected(h, 3):
            raise VerificationError(
                "augmented graph failed the 3-connectivity check; "
                "potential algorithm counterexample"
            )
    return result


def augmented_graph(t: Tree, result: AugmentationResult) -> Graph:
    """The graph H = T + E_ca."""
    return t.graph.with_edges(result.edges)


def _finish(
    t: Tree,
    edges: list[Edge],
    case: str,
    pairs: tuple[Edge, ...],
    chain: tuple[int, ...],
) -> AugmentationResult:
    bound = lower_bound(t)
    seen: set[frozenset[int]] = set()
    for u, v in edges:
        if u == v:
            raise VerificationError(f"augmentation produced self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise VerificationError(f"augmentation produced duplicate edge ({u}, {v})")
        if t.graph.has_edge(u, v):
            raise VerificationError(f"augmentation reused tree edge ({u}, {v})")
        seen.add(key)
    if len(edges) != bound:
        raise VerificationError(
            f"augmented {len(edges)} edges, expected the bound {bound}"
        )
    return AugmentationResult(
        edges=tuple(edges),
        bound=bound,
        case_taken=case,
        matched_pairs=pairs,
        residual_chain=chain,
    )

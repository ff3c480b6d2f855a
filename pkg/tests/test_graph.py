import pytest
from hypothesis import given

from conftest import labeled_trees, path_tree, simple_graphs, star_tree, tree_of
from triaug import (
    ContractViolationError,
    DuplicateEdgeError,
    NotATreeError,
    SelfLoopError,
    VertexRangeError,
    decorate,
    graph_from_edges,
    is_ancestor,
    validate_tree,
    vertex_connectivity,
)

DOUBLE_CHAIN = (7, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (2, 6)])
SPIDER = (5, [(0, 1), (0, 2), (0, 3), (1, 4)])


class TestGraphFromEdges:
    def test_path_degrees(self):
        g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
        assert g.m == 3

    def test_single_vertex(self):
        g = graph_from_edges(1, [])
        assert g.n == 1 and g.m == 0

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError):
            graph_from_edges(3, [(0, 1), (0, 1)])

    def test_reversed_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            graph_from_edges(3, [(0, 1), (1, 0)])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            graph_from_edges(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(VertexRangeError):
            graph_from_edges(3, [(0, 3)])

    def test_adjacency_sorted_and_symmetric(self):
        g = graph_from_edges(5, [(3, 1), (0, 3), (4, 0)])
        for u in range(5):
            assert list(g.adjacency[u]) == sorted(g.adjacency[u])
            for v in g.adjacency[u]:
                assert g.has_edge(v, u)

    @given(simple_graphs())
    def test_symmetry_and_edge_count(self, g):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
        for u in range(g.n):
            for v in g.adjacency[u]:
                assert u in g.adjacency[v]


class TestValidateTree:
    def test_path(self):
        t = path_tree(4)
        assert (t.l1, t.l2, t.is_path) == (2, 2, True)

    def test_star(self):
        t = star_tree(4)
        assert (t.l1, t.l2, t.is_path) == (3, 0, False)

    def test_cycle_rejected(self):
        g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(NotATreeError):
            validate_tree(g)

    def test_disconnected_rejected(self):
        g = graph_from_edges(4, [(0, 1), (0, 2), (1, 2)])
        with pytest.raises(NotATreeError):
            validate_tree(g)

    @given(labeled_trees(min_n=3, max_n=10))
    def test_tree_connectivity_is_one(self, t):
        assert vertex_connectivity(t.graph) == 1


class TestDecorate:
    def test_spider(self):
        d = decorate(tree_of(*SPIDER))
        assert d.root == 0
        assert d.leaf_order == (2, 3, 4)
        assert d.w_order == (1,)

    def test_double_chain(self):
        d = decorate(tree_of(*DOUBLE_CHAIN))
        assert d.root == 0
        assert d.leaf_order == (3, 6, 5)
        assert d.w_order == (1, 2, 4)

    def test_star(self):
        d = decorate(star_tree(4))
        assert d.leaf_order == (1, 2, 3)
        assert d.w_order == ()

    def test_path_rejected(self):
        with pytest.raises(ContractViolationError):
            decorate(path_tree(5))

    def test_root_tie_break_smallest_id(self):
        # two degree-3 vertices: 1 and 4
        t = tree_of(7, [(1, 0), (1, 2), (1, 4), (4, 3), (4, 5), (5, 6)])
        assert decorate(t).root == 1

    @given(labeled_trees(min_n=4, max_n=10))
    def test_orderings_partition_vertices(self, t):
        if t.is_path:
            return
        d = decorate(t)
        assert sorted(d.level_order) == list(range(t.n))
        higher = [v for v in range(t.n) if t.graph.degree(v) >= 3]
        assert sorted(d.leaf_order + d.w_order + tuple(higher)) == list(range(t.n))
        # BFS validity: levels non-decreasing, parents appear first
        pos = {v: i for i, v in enumerate(d.level_order)}
        for i in range(1, t.n):
            assert d.level[d.level_order[i]] >= d.level[d.level_order[i - 1]]
        for v in range(t.n):
            if v != d.root:
                assert pos[d.parent[v]] < pos[v]


class TestIsAncestor:
    def test_chain_containment(self):
        d = decorate(tree_of(*DOUBLE_CHAIN))
        assert is_ancestor(d, 1, 5)  # p1 above pL
        assert not is_ancestor(d, 1, 6)  # disjoint branches
        assert is_ancestor(d, 4, 4)

    def test_root_is_ancestor_of_all(self):
        d = decorate(tree_of(*DOUBLE_CHAIN))
        assert all(is_ancestor(d, d.root, v) for v in range(7))

    @given(labeled_trees(min_n=4, max_n=10))
    def test_strict_ancestry_implies_lower_level(self, t):
        if t.is_path:
            return
        d = decorate(t)
        for u in range(t.n):
            for v in range(t.n):
                if u != v and is_ancestor(d, u, v):
                    assert d.level[u] < d.level[v]

    def test_branch_membership(self):
        d = decorate(tree_of(*DOUBLE_CHAIN))
        # branch of leaf 5 is the path 0-1-4-5
        assert {u for u in range(7) if 5 in d.branch_leaves(u) or u == d.root} == {0, 1, 4, 5}

from hypothesis import strategies as st

from triaug import Tree, graph_from_edges, prufer_decode, validate_tree


def tree_of(n, edges) -> Tree:
    return validate_tree(graph_from_edges(n, edges))


def path_tree(n: int) -> Tree:
    return tree_of(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    return tree_of(n, [(0, i) for i in range(1, n)])


@st.composite
def labeled_trees(draw, min_n: int = 4, max_n: int = 12):
    """Uniform labeled tree via a drawn Prüfer sequence."""
    n = draw(st.integers(min_n, max_n))
    if n == 2:
        return tree_of(2, [(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_of(n, prufer_decode(seq, n))


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 9):
    """Arbitrary simple graph as a subset of all possible edges."""
    n = draw(st.integers(min_n, max_n))
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(all_edges), unique=True) if all_edges else st.just([]))
    return graph_from_edges(n, chosen)

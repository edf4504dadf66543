import random

import pytest
from hypothesis import given, strategies as st

from irrlab.errors import NotAPermutationError, SelfLoopError, VertexOutOfRangeError
from irrlab.graphs import (
    classify_tree,
    degrees,
    from_edge_list,
    from_edge_list_text,
    is_connected,
    is_path_graph,
    is_star_graph,
    is_tree,
    relabel,
    to_edge_list_text,
)

from conftest import complete_graph, path_graph, random_graph, star_graph


def test_from_edge_list_path():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.n == 3 and g.m == 2


def test_from_edge_list_dedup():
    g = from_edge_list(2, [(0, 1), (1, 0)])
    assert g.m == 1


def test_from_edge_list_self_loop():
    with pytest.raises(SelfLoopError):
        from_edge_list(2, [(0, 0)])


def test_from_edge_list_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        from_edge_list(2, [(0, 2)])


def test_degrees():
    assert degrees(path_graph(4)) == [1, 2, 2, 1]
    assert degrees(complete_graph(4)) == [3, 3, 3, 3]
    assert degrees(star_graph(5)) == [4, 1, 1, 1, 1]


def test_is_connected():
    assert is_connected(path_graph(5))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(from_edge_list(1, []))


def test_classify_tree():
    assert classify_tree(path_graph(6)) == "path"
    assert classify_tree(star_graph(6)) == "star"
    spider = from_edge_list(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    assert classify_tree(spider) == "other_tree"
    assert classify_tree(from_edge_list(3, [(0, 1), (1, 2), (0, 2)])) == "not_tree"


def test_path_star_overlap_at_n3():
    p3 = path_graph(3)
    assert is_path_graph(p3) and is_star_graph(p3)
    assert classify_tree(p3) == "path"


def test_tree_iff_connected_and_m_eq_n_minus_1(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        expected = is_connected(g) and g.m == g.n - 1
        assert is_tree(g) == expected
        assert (classify_tree(g) != "not_tree") == expected


def test_relabel_identity():
    g = path_graph(3)
    assert relabel(g, [0, 1, 2]).edges == g.edges


def test_relabel_path_swap():
    g = path_graph(3)
    assert relabel(g, [2, 1, 0]).edges == g.edges


def test_relabel_complete_fixed():
    g = complete_graph(3)
    assert relabel(g, [1, 2, 0]).edges == g.edges


def test_relabel_rejects_non_permutation():
    with pytest.raises(NotAPermutationError):
        relabel(path_graph(3), [0, 0, 2])


@given(st.integers(min_value=1, max_value=9), st.randoms(use_true_random=False))
def test_relabel_permutes_degrees(n, rnd):
    g = random_graph(rnd, n)
    perm = list(range(n))
    rnd.shuffle(perm)
    d = degrees(g)
    dp = degrees(relabel(g, perm))
    for v in range(n):
        assert dp[perm[v]] == d[v]


def test_edge_list_text_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 9))
        assert from_edge_list_text(to_edge_list_text(g)).edges == g.edges

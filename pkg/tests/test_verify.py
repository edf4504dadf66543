from math import isqrt

import pytest

from irrlab.constructions import ChainParams, extremal_chain
from irrlab.errors import (
    CapExceededError,
    DisconnectedError,
    NotATreeError,
    OrderTooSmallError,
    RegularGraphError,
)
from irrlab.graphs import degrees, from_edge_list, is_connected
from irrlab.measures import measure_all
from irrlab.trees import enumerate_free_trees, greedy_tree
from irrlab.verify import (
    check_greedy_identity,
    check_ratio_bounds,
    check_tree_theorems,
    enumerate_connected_labeled_graphs,
    exhaustive_tree_scan,
    greedy_scan,
    min_greedy_simple_path,
    min_greedy_walk,
    ratio_scan,
    replay_greedy_subsequence,
)

from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


def test_tree_theorems_p4():
    rep = check_tree_theorems(path_graph(4))
    assert rep.all_hold
    assert rep.checks["path_bound"].equality
    assert rep.checks["greedy_lower_bound"].equality


def test_tree_theorems_s5():
    rep = check_tree_theorems(star_graph(5))
    assert rep.all_hold
    assert rep.checks["star_equality"].equality
    assert rep.checks["centered_square_upper"].equality


def test_tree_theorems_spider():
    t = greedy_tree((3, 2, 2, 1, 1, 1)).to_graph()
    rep = check_tree_theorems(t)
    assert rep.all_hold
    assert rep.checks["greedy_lower_bound"].equality
    assert not rep.checks["path_bound"].equality


def test_tree_theorems_errors():
    with pytest.raises(NotATreeError):
        check_tree_theorems(cycle_graph(4))
    with pytest.raises(OrderTooSmallError):
        check_tree_theorems(path_graph(2))


def test_greedy_identity_examples():
    assert check_greedy_identity((2, 2, 1, 1))
    assert check_greedy_identity((3, 3, 2, 1, 1, 1, 1))


def test_min_greedy_walk_path():
    for n in (3, 6, 10):
        res = min_greedy_walk(path_graph(n))
        assert res.r == 1 and res.subsequence == (1, 2)


def test_min_greedy_walk_regular():
    for g in (complete_graph(5), cycle_graph(6)):
        res = min_greedy_walk(g)
        assert res.r == 0 and len(res.walk) == 1


def test_min_greedy_walk_chain():
    g = extremal_chain(ChainParams(k=10, s=0))
    res = min_greedy_walk(g)
    assert res.r == 4 and res.subsequence == (3, 4, 5, 6, 7)


def test_min_greedy_walk_replay_consistency(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 9))
        if not is_connected(g):
            continue
        res = min_greedy_walk(g)
        d = degrees(g)
        assert res.subsequence == replay_greedy_subsequence(g, res.walk)
        assert res.subsequence[0] == min(d)
        assert res.subsequence[-1] == max(d)
        assert list(res.subsequence) == sorted(set(res.subsequence))
        assert res.r == len(res.subsequence) - 1


def test_min_greedy_walk_disconnected():
    with pytest.raises(DisconnectedError):
        min_greedy_walk(from_edge_list(4, [(0, 1), (2, 3)]))


def test_simple_path_vs_walk(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 7))
        if not is_connected(g):
            continue
        walk = min_greedy_walk(g)
        path = min_greedy_simple_path(g)
        assert walk.r <= path.r
        seen = set(path.walk)
        assert len(seen) == len(path.walk)  # simple


def test_simple_path_cap():
    with pytest.raises(CapExceededError):
        min_greedy_simple_path(path_graph(13))


def test_check_ratio_bounds_p10():
    rep = check_ratio_bounds(path_graph(10))
    assert rep.all_hold
    assert rep.checks["r_squared_le_6n"].witness["r"] == 1


def test_check_ratio_bounds_chain():
    g = extremal_chain(ChainParams(k=12, s=0))
    rep = check_ratio_bounds(g)
    assert rep.all_hold


def test_check_ratio_bounds_errors():
    with pytest.raises(RegularGraphError):
        check_ratio_bounds(complete_graph(4))
    with pytest.raises(DisconnectedError):
        check_ratio_bounds(from_edge_list(4, [(0, 1), (2, 3)]))


def test_connected_enumeration_counts():
    assert sum(1 for _ in enumerate_connected_labeled_graphs(2)) == 1
    assert sum(1 for _ in enumerate_connected_labeled_graphs(3)) == 4
    # n=4: cross-checked against an independent union-find connectivity pass
    count_uf = 0
    positions = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    for mask in range(1 << 6):
        parent = list(range(4))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v) in enumerate(positions):
            if (mask >> i) & 1:
                parent[find(u)] = find(v)
        if len({find(v) for v in range(4)}) == 1:
            count_uf += 1
    assert count_uf == 38
    assert sum(1 for _ in enumerate_connected_labeled_graphs(4)) == 38


def test_connected_enumeration_cap():
    with pytest.raises(CapExceededError):
        next(enumerate_connected_labeled_graphs(8))


def test_ratio_bounds_exhaustive_n5():
    for g in enumerate_connected_labeled_graphs(5):
        rep = measure_all(g)
        if rep.sigma == 0:
            continue
        assert check_ratio_bounds(g).all_hold


def test_exhaustive_tree_scan_small():
    summary = exhaustive_tree_scan(3, 10)
    assert summary.ok
    assert not summary.violations
    for n in range(3, 11):
        assert summary.path_equality_counts[n] == 1
        assert summary.star_equality_counts[n] == 1


def test_tree_scan_max_ratio_witness_is_path():
    # (n-2) sigma >= sigma_t with equality only on P_n, so the path is
    # the per-n ratio maximizer among trees.
    summary = exhaustive_tree_scan(5, 8)
    for n in range(5, 9):
        wit = summary.max_ratio_witness[n]
        assert wit["ratio_num"] == n - 2 and wit["ratio_den"] == 1


def test_greedy_scan_small():
    summary = greedy_scan(10, minimality_n_max=10)
    assert summary.ok
    assert summary.sequences_checked > 0
    assert summary.minimality_checked == summary.sequences_checked


def test_ratio_scan_table():
    rows, slope = ratio_scan([10, 12, 14], s=0)
    assert [row["sigma"] for row in rows] == [4, 6, 8]
    assert all(row["n"] == k * (k - 5) + 2 for row, k in zip(rows, [10, 12, 14]))


def test_walk_r_bound_on_trees():
    for t in enumerate_free_trees(9):
        res = min_greedy_walk(t)
        assert res.r * res.r <= 6 * 9

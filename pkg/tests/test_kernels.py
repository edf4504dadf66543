import pytest

from irrlab.kernels import (
    HAS_NUMBA,
    active_backend,
    prufer_free_tree_count,
    scan_connected_graphs,
)
from irrlab.measures import measure_all
from irrlab.trees import enumerate_free_trees
from irrlab.verify import enumerate_connected_labeled_graphs, min_greedy_walk

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba not installed")


def test_active_backend_is_known():
    assert active_backend() in ("numba", "numpy")


def test_numpy_scan_matches_python_reference():
    # independent cross-check against the plain-Python enumeration + walk search
    for n in (2, 3, 4, 5):
        res = scan_connected_graphs(n, backend="numpy")
        graphs = list(enumerate_connected_labeled_graphs(n))
        assert res.connected == len(graphs)
        assert res.ok
        max_r = max(min_greedy_walk(g).r for g in graphs)
        assert res.max_r == max_r


@needs_numba
def test_numba_scan_matches_numpy():
    for n in (2, 3, 4, 5, 6):
        a = scan_connected_graphs(n, backend="numba")
        b = scan_connected_graphs(n, backend="numpy")
        assert a == b


@needs_numba
def test_numba_scan_jobs_invariant():
    a = scan_connected_graphs(6, backend="numba", jobs=1)
    b = scan_connected_graphs(6, backend="numba", jobs=4)
    assert a == b


def test_scan_rejects_bad_n():
    with pytest.raises(ValueError):
        scan_connected_graphs(9)


def test_prufer_oracle_python_small():
    # plain (uncompiled) backend path
    assert [prufer_free_tree_count(n, backend="numpy") for n in range(1, 9)] == [
        1, 1, 1, 2, 3, 6, 11, 23,
    ]


@needs_numba
def test_prufer_oracle_matches_enumeration():
    for n in range(1, 10):
        assert prufer_free_tree_count(n, backend="numba") == sum(
            1 for _ in enumerate_free_trees(n)
        )


def test_prufer_oracle_rejects_large_n():
    with pytest.raises(ValueError):
        prufer_free_tree_count(13)

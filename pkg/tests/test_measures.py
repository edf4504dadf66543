from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from irrlab.errors import RegularGraphError
from irrlab.graphs import relabel
from irrlab.measures import (
    measure_all,
    ratio,
    sigma_t_closed_form,
    sigma_t_naive,
    sum_centered_squares,
)

from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


def test_measure_p4():
    rep = measure_all(path_graph(4))
    assert (rep.irr, rep.sigma, rep.sigma_t) == (2, 2, 4)
    assert rep.var == Fraction(4, 16)


def test_measure_s5():
    rep = measure_all(star_graph(5))
    assert (rep.irr, rep.sigma, rep.sigma_t) == (12, 36, 36)


def test_measure_cycles_regular():
    for n in (3, 5, 8):
        rep = measure_all(cycle_graph(n))
        assert rep.irr == rep.sigma == rep.sigma_t == 0


def test_closed_form_hand_values():
    assert sigma_t_closed_form([1, 2, 2, 1]) == 4 * 10 - 36 == 4
    assert sigma_t_closed_form([4, 1, 1, 1, 1]) == 5 * 20 - 64 == 36


def test_closed_form_vs_naive_random(rng):
    from irrlab.graphs import degrees

    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 40))
        d = degrees(g)
        assert sigma_t_closed_form(d) == sigma_t_naive(d)


def test_sum_centered_squares():
    assert sum_centered_squares([1, 2, 2, 1], 2) == 2
    assert sum_centered_squares([4, 1, 1, 1, 1], 2) == 8
    d = [3, 1, 4, 1, 5]
    assert sum_centered_squares(d, 0) == sum(x * x for x in d)


def test_ratio_path():
    for n in (4, 7, 12):
        assert ratio(path_graph(n)) == n - 2


def test_ratio_star_and_regular():
    assert ratio(star_graph(5)) == 1
    with pytest.raises(RegularGraphError):
        ratio(complete_graph(4))


def test_var_identity_and_order(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12))
        rep = measure_all(g)
        assert rep.sigma <= rep.sigma_t
        assert rep.irr <= rep.sigma
        assert rep.sigma_t == rep.n * rep.n * rep.var  # IRV identity, exact
        regular = rep.delta == rep.Delta
        assert (rep.sigma_t == 0) == regular
        if regular:
            assert rep.irr == 0 and rep.sigma == 0
        from irrlab.graphs import is_connected

        if is_connected(g):
            # on connected graphs the three measures vanish together
            assert (rep.irr == 0) == (rep.sigma == 0) == (rep.sigma_t == 0)


def test_irr_eq_sigma_iff_unit_differences(rng):
    from irrlab.graphs import degrees

    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 10))
        rep = measure_all(g)
        d = degrees(g)
        unit = all(abs(d[u] - d[v]) <= 1 for u, v in g.edges)
        assert (rep.irr == rep.sigma) == unit


@given(st.integers(min_value=1, max_value=9), st.randoms(use_true_random=False))
def test_measures_isomorphism_invariant(n, rnd):
    g = random_graph(rnd, n)
    perm = list(range(n))
    rnd.shuffle(perm)
    assert measure_all(g) == measure_all(relabel(g, perm))


def test_csv_row():
    rep = measure_all(path_graph(4))
    assert rep.as_csv_row() == "4,3,1,2,2,2,4,1,4"

"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
All checks are exact integer comparisons except the two slope-window
checks, whose tolerances are pinned here.
"""

import random
from collections import Counter
from fractions import Fraction

import pytest

from irrlab.constructions import ChainParams, extremal_chain_with_manifest
from irrlab.graph6 import parse_graph6, write_graph6
from irrlab.graphs import degrees, is_connected
from irrlab.kernels import prufer_free_tree_count, scan_connected_graphs
from irrlab.measures import measure_all, ratio, sigma_t_closed_form, sigma_t_naive
from irrlab.trees import enumerate_free_trees
from irrlab.verify import exhaustive_tree_scan, greedy_scan, loglog_slope, ratio_scan

from conftest import random_graph

TREE_N_MAX = 16
CHAIN_KS = list(range(10, 27, 2))
RATIO_SLOPE_WINDOW = (2.3, 2.6)
QUADRATIC_SLOPE_WINDOW = (1.8, 2.2)


def report(num: int, desc: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {num} failed: {desc}"


@pytest.fixture(scope="module")
def tree_scan():
    return exhaustive_tree_scan(3, TREE_N_MAX)


def test_criterion_1_exhaustive_tree_inequalities(tree_scan):
    ok = not tree_scan.violations and tree_scan.trees_checked > 10_000
    report(
        1,
        f"all 4 tree inequalities over {tree_scan.trees_checked} free trees, "
        f"3 <= n <= {TREE_N_MAX}, zero violations",
        ok,
    )


def test_criterion_2_greedy_identity_and_minimality():
    summary = greedy_scan(TREE_N_MAX, minimality_n_max=12)
    ok = summary.ok and summary.minimality_checked > 0
    report(
        2,
        f"greedy g-identity for {summary.sequences_checked} sequences (n <= "
        f"{TREE_N_MAX}), irr-minimality for {summary.minimality_checked} (n <= 12)",
        ok,
    )


def test_criterion_3_equality_censuses(tree_scan):
    ok = all(
        tree_scan.path_equality_counts[n] == 1
        and tree_scan.star_equality_counts[n] == 1
        for n in range(3, TREE_N_MAX + 1)
    )
    report(3, f"per-n path/star equality censuses all exactly 1, n <= {TREE_N_MAX}", ok)


def test_criterion_4_construction_exactness():
    ok = True
    for k in CHAIN_KS:
        for s in (0, 1):
            g, man = extremal_chain_with_manifest(ChainParams(k=k, s=s))
            rep = measure_all(g)
            ok &= rep.n == k * (k - 5) + 2 + 4 * s
            ok &= rep.sigma == k - 6
            ok &= is_connected(g)
            d = degrees(g)
            for deg, off, order, _ in man.blocks:
                ok &= all(d[v] == deg for v in range(off, off + order))
        godd = extremal_chain_with_manifest(
            ChainParams(k=k, s=0, odd_order=True)
        )[0]
        rodd = measure_all(godd)
        ok &= rodd.n == k * (k - 5) + 3
        ok &= rodd.sigma == k - 6 and is_connected(godd)
    report(
        4,
        f"chain order/sigma/connectivity/block degrees exact for k in "
        f"{{{CHAIN_KS[0]}..{CHAIN_KS[-1]}}}, s in {{0,1}}, plus odd variants",
        ok,
    )


def test_criterion_5_ratio_exponent():
    rows, slope = ratio_scan(CHAIN_KS, s=0)
    lo, hi = RATIO_SLOPE_WINDOW
    ratios = [Fraction(r["ratio_num"], r["ratio_den"]) for r in rows]
    ok = lo <= slope <= hi
    ok &= all(a < b for a, b in zip(ratios, ratios[1:]))
    ok &= all(r["sigma"] == k - 6 for r, k in zip(rows, CHAIN_KS))
    report(
        5,
        f"log-log ratio slope {slope:.3f} in [{lo}, {hi}], ratio strictly "
        "increasing in k, sigma column exact",
        ok,
    )


def test_criterion_6_universal_graph_bounds():
    ok = True
    total = 0
    for n in range(2, 8):
        res = scan_connected_graphs(n)
        ok &= res.ok
        total += res.connected
    report(
        6,
        f"r^2<=6n, trivial sigma_t upper bound, and 2 sigma_t^2 <= 3 n^5 sigma^2 "
        f"over {total} connected labeled graphs, n <= 7, zero violations",
        ok,
    )


def test_criterion_7_oracle_equivalences():
    rng = random.Random(7_2024)
    ok = True
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 40))
        d = degrees(g)
        ok &= sigma_t_closed_form(d) == sigma_t_naive(d)
    for n in range(1, 11):
        ok &= prufer_free_tree_count(n) == sum(1 for _ in enumerate_free_trees(n))
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 62))
        back = parse_graph6(write_graph6(g))
        ok &= back.n == g.n and back.edges == g.edges
    report(
        7,
        "closed-form sigma_t vs pairwise oracle (200 graphs), free-tree counts "
        "vs Prufer dedup (n <= 10), graph6 round-trip (200 graphs)",
        ok,
    )


def test_criterion_8_quadratic_example_slope():
    pairs = [(n, ratio_of_quadratic(n)) for n in range(20, 201, 20)]
    slope = loglog_slope(pairs)
    lo, hi = QUADRATIC_SLOPE_WINDOW
    ok = lo <= slope <= hi
    report(8, f"quadratic-example log-log ratio slope {slope:.3f} in [{lo}, {hi}]", ok)


def ratio_of_quadratic(n: int) -> Fraction:
    from irrlab.constructions import quadratic_example

    return ratio(quadratic_example(n))

import random

import pytest

from irrlab.graphs import Graph, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.uniform(0.1, 0.9)
    pairs = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, pairs)


@pytest.fixture
def rng():
    return random.Random(20240817)

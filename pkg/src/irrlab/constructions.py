"""Extremal graph families built from difference classes of complete graphs.

The chain construction glues near-regular circulant blocks (one vertex
two degrees short) and two odd-order side blocks (one vertex one degree
short) along a path of bridge edges, producing connected graphs whose
only unequal-degree edges are the bridges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    BadClassIndexError,
    InternalOverlapError,
    ParamsOutOfRangeError,
)
from .graphs import Graph, from_edge_list


@dataclass(frozen=True)
class ChainParams:
    """Parameters of the chained construction."""

    k: int
    s: int = 0
    odd_order: bool = False

    def validate(self) -> None:
        if self.k % 2 or self.k < 10:
            raise ParamsOutOfRangeError(f"k must be even and >= 10, got {self.k}")
        if self.s < 0:
            raise ParamsOutOfRangeError(f"s must be >= 0, got {self.s}")


@dataclass(frozen=True)
class BlockSpec:
    """Expected degree profile of one block."""

    order: int
    target_degree: int
    deficient_vertex: int
    deficiency: int


def difference_factor(k: int, i: int) -> set:
    """Difference class i of K_k: edges {v, v+i mod k} on vertices 0..k-1.

    For i < k/2 this is a spanning 2-regular subgraph (gcd(i, k)
    cycles); for i = k/2 it is a perfect matching.  The classes
    i = 1..k/2 partition the edges of K_k.
    """
    if k < 4 or k % 2:
        raise ParamsOutOfRangeError(f"k must be even >= 4, got {k}")
    if not 1 <= i <= k // 2:
        raise BadClassIndexError(f"class index {i} outside 1..{k // 2}")
    edges = set()
    for v in range(k):
        w = (v + i) % k
        edges.add((v, w) if v < w else (w, v))
    return edges


def _union_disjoint(parts) -> set:
    """Union of edge sets that must be pairwise disjoint."""
    out = set()
    for part in parts:
        overlap = out & part
        if overlap:
            raise InternalOverlapError(f"factors share edges {sorted(overlap)[:4]}")
        out |= part
    return out


def near_regular_block(k: int, r: int) -> Graph:
    """Connected graph of order k, all degrees r except one vertex of degree r-2.

    Built from the deficient cycle 0-1-...-(k-2)-0 (vertex k-1 isolated
    in that factor) plus floor((r-2)/2) full difference factors taken
    from classes 3, 4, ... in increasing order, plus the perfect
    matching (class k/2) when r is odd.  Classes 1 and 2 are excluded
    because the deficient cycle consumes edges from them.
    """
    if k < 8 or k % 2:
        raise ParamsOutOfRangeError(f"k must be even >= 8, got {k}")
    if not 4 <= r <= k - 4:
        raise ParamsOutOfRangeError(f"r={r} outside 4..{k - 4}")
    cycle = {(v, v + 1) for v in range(k - 2)} | {(0, k - 2)}
    factors = [cycle]
    n_full = (r - 2) // 2
    factors.extend(difference_factor(k, 3 + j) for j in range(n_full))
    if r % 2:
        factors.append(difference_factor(k, k // 2))
    return from_edge_list(k, _union_disjoint(factors))


def near_regular_block_spec(k: int, r: int) -> BlockSpec:
    return BlockSpec(order=k, target_degree=r, deficient_vertex=k - 1, deficiency=2)


def side_block(m: int, t: int) -> Graph:
    """Connected graph of odd order m, all degrees t except one vertex of degree t-1.

    Circulant pieces on Z_m: the difference-2 Hamiltonian cycle as base
    (gcd(2, m) = 1), (t-3)/2 further difference factors from classes
    3, 4, ..., and the near-perfect matching of difference-1 edges
    (2j-1, 2j) leaving vertex 0 one degree short.
    """
    if m % 2 == 0:
        raise ParamsOutOfRangeError(f"order m must be odd, got {m}")
    if t % 2 == 0 or t < 3:
        raise ParamsOutOfRangeError(f"target degree t must be odd >= 3, got {t}")
    if t == 3:
        if m < 5:
            raise ParamsOutOfRangeError(f"t=3 needs m >= 5, got {m}")
    elif t > m - 2:
        raise ParamsOutOfRangeError(f"t={t} exceeds m-2={m - 2}")
    base = set()
    for v in range(m):
        w = (v + 2) % m
        base.add((v, w) if v < w else (w, v))
    factors = [base]
    for j in range((t - 3) // 2):
        i = 3 + j
        edges = set()
        for v in range(m):
            w = (v + i) % m
            edges.add((v, w) if v < w else (w, v))
        factors.append(edges)
    matching = {(2 * j - 1, 2 * j) for j in range(1, (m - 1) // 2 + 1)}
    factors.append(matching)
    return from_edge_list(m, _union_disjoint(factors))


def side_block_spec(m: int, t: int) -> BlockSpec:
    return BlockSpec(order=m, target_degree=t, deficient_vertex=0, deficiency=1)


def _odd_variant_degree4_block(k: int) -> Graph:
    """Order k+1 block, all degrees 4 except vertex k of degree 2.

    Hamiltonian cycle on Z_{k+1} plus the difference-2 circulant taken
    mod k on labels 0..k-1 (2-regular since k is even), leaving vertex k
    with degree 2.
    """
    ham = set()
    for v in range(k + 1):
        w = (v + 1) % (k + 1)
        ham.add((v, w) if v < w else (w, v))
    extra = set()
    for v in range(k):
        w = (v + 2) % k
        extra.add((v, w) if v < w else (w, v))
    return from_edge_list(k + 1, _union_disjoint([ham, extra]))


@dataclass(frozen=True)
class ChainManifest:
    """Where each block landed in the assembled chain."""

    params: ChainParams
    blocks: tuple  # (degree, offset, order, deficient_vertex_global) per block
    bridges: tuple  # global (v_i, v_{i+1}) pairs

    def as_dict(self) -> dict:
        return {
            "k": self.params.k,
            "s": self.params.s,
            "odd_order": self.params.odd_order,
            "blocks": [
                {
                    "degree": deg,
                    "offset": off,
                    "order": order,
                    "deficient_vertex": dv,
                }
                for deg, off, order, dv in self.blocks
            ],
            "bridges": [list(b) for b in self.bridges],
        }


def extremal_chain_with_manifest(p: ChainParams) -> tuple:
    """Assemble the chain; returns (Graph, ChainManifest)."""
    p.validate()
    k, s = p.k, p.s
    side_order = k + 1 + 2 * s
    pieces = []  # (degree, graph, deficient_vertex_local)
    pieces.append((3, side_block(side_order, 3), 0))
    for r in range(4, k - 3):
        if r == 4 and p.odd_order:
            pieces.append((4, _odd_variant_degree4_block(k), k))
        else:
            pieces.append((r, near_regular_block(k, r), k - 1))
    pieces.append((k - 3, side_block(side_order, k - 3), 0))

    edges = []
    blocks = []
    anchors = {}
    offset = 0
    for deg, g, dv in pieces:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        anchors[deg] = dv + offset
        blocks.append((deg, offset, g.n, dv + offset))
        offset += g.n
    bridges = tuple(
        (anchors[i], anchors[i + 1]) for i in range(3, k - 3)
    )
    edges.extend(bridges)
    graph = from_edge_list(offset, edges)
    return graph, ChainManifest(params=p, blocks=tuple(blocks), bridges=bridges)


def extremal_chain(p: ChainParams) -> Graph:
    """The chained construction; order k(k-5)+2+4s (+1 for the odd variant)."""
    return extremal_chain_with_manifest(p)[0]


def quadratic_example(n: int) -> Graph:
    """Path of n/2 vertices joined at both ends to the two low-degree
    vertices of K_{n/2} minus one edge."""
    if n % 2 or n // 2 < 5:
        raise ParamsOutOfRangeError(f"n must be even with n/2 >= 5, got {n}")
    h = n // 2
    # path on 0..h-1, clique on h..n-1 minus edge (h, h+1)
    edges = [(i, i + 1) for i in range(h - 1)]
    edges.extend(
        (u, v)
        for u in range(h, n)
        for v in range(u + 1, n)
        if (u, v) != (h, h + 1)
    )
    edges.append((0, h))
    edges.append((h - 1, h + 1))
    return from_edge_list(n, edges)

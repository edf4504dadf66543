"""Undirected simple graphs on vertices 0..n-1.

Graphs are immutable after construction: the edge set is canonicalized
with u < v and frozen, so values can be shared freely across workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    NotAPermutationError,
    SelfLoopError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a frozen set of (u, v), u < v."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list:
        """Per-vertex sorted neighbor lists, built on demand."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def sorted_edges(self) -> list:
        return sorted(self.edges)


def from_edge_list(n: int, pairs: Iterable) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse, self-loops raise."""
    edges = set()
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(u)
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(w, n)
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def degrees(g: Graph) -> list:
    """Degree of every vertex."""
    d = [0] * g.n
    for u, v in g.edges:
        d[u] += 1
        d[v] += 1
    return d


def min_max_degree(g: Graph) -> tuple:
    """(delta, Delta) for a graph with at least one vertex."""
    d = degrees(g)
    return min(d), max(d)


def is_connected(g: Graph) -> bool:
    """One BFS from vertex 0 reaches everything."""
    if g.n == 0:
        return False
    adj = g.neighbors()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    """True for P_n: a tree with maximum degree at most 2."""
    return is_tree(g) and (g.n <= 2 or max(degrees(g)) <= 2)


def is_star_graph(g: Graph) -> bool:
    """True for S_n: a tree with at most one non-leaf vertex.

    P_3 = S_3 and trees with n <= 2 count as both path and star.
    """
    if not is_tree(g):
        return False
    if g.n <= 2:
        return True
    return sum(1 for x in degrees(g) if x > 1) <= 1


def classify_tree(g: Graph) -> str:
    """One of 'not_tree', 'path', 'star', 'other_tree'.

    The overlap cases (n <= 3, where the unique trees are simultaneously
    paths and stars) report as 'path'; use is_path_graph / is_star_graph
    when both flags matter.
    """
    if not is_tree(g):
        return "not_tree"
    if is_path_graph(g):
        return "path"
    if is_star_graph(g):
        return "star"
    return "other_tree"


def relabel(g: Graph, perm: Sequence) -> Graph:
    """Apply a permutation of 0..n-1 to the vertex labels."""
    if len(perm) != g.n or sorted(perm) != list(range(g.n)):
        raise NotAPermutationError(f"not a permutation of 0..{g.n - 1}: {perm!r}")
    return from_edge_list(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def to_edge_list_text(g: Graph) -> str:
    """Edge-list text format: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    """Parse the edge-list text format produced by to_edge_list_text."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge-list text needs at least the 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges, got {(len(tokens) - 2) // 2}")
    pairs = [
        (int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])) for i in range(m)
    ]
    return from_edge_list(n, pairs)

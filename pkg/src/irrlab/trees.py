"""Trees: enumeration, canonical forms, greedy construction, g-recursion.

Free trees are enumerated by generating canonical rooted level sequences
with the classic successor rule (descending lexicographic order) and
keeping exactly the sequences that are fixed points of the free-tree
canonical form (root moved to the centroid).  Every unlabeled free tree
is therefore yielded exactly once, with no dedup set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import caps
from .errors import (
    CapExceededError,
    MaxDegreeExceeds3Error,
    NotRealizableError,
)
from .graphs import Graph, degrees, from_edge_list


# ---------------------------------------------------------------------------
# Level sequences and canonical forms


def level_sequence_successor(levels: list) -> list | None:
    """Next canonical rooted level sequence in descending lex order.

    Levels are 0-based (root at level 0).  Returns None after the last
    sequence (the star, [0, 1, 1, ..., 1]).
    """
    n = len(levels)
    p = None
    for i in range(n - 1, 0, -1):
        if levels[i] >= 2:
            p = i
            break
    if p is None:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = levels[:p]
    width = p - q
    while len(out) < n:
        out.append(out[len(out) - width])
    return out


def tree_from_level_sequence(levels: Sequence) -> Graph:
    """Graph of the rooted tree described by a level sequence (vertex i = position i)."""
    n = len(levels)
    pairs = []
    stack = [0]  # stack[k] = current vertex at level k
    for i in range(1, n):
        lev = levels[i]
        del stack[lev:]
        pairs.append((stack[lev - 1], i))
        stack.append(i)
    return from_edge_list(n, pairs)


def rooted_canonical_levels(g: Graph, root: int) -> tuple:
    """Canonical level sequence of g rooted at root.

    Children subtree sequences are sorted in non-increasing lex order, so
    the result is the lex-greatest level sequence over plane embeddings.
    """
    adj = g.neighbors()

    # Iterative post-order to avoid recursion limits.
    order = []
    parent = [-1] * g.n
    stack = [root]
    seen = [False] * g.n
    seen[root] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    code = [None] * g.n
    for u in reversed(order):
        kids = sorted(
            (code[w] for w in adj[u] if parent[w] == u), reverse=True
        )
        seq = [0]
        for k in kids:
            seq.extend(x + 1 for x in k)
        code[u] = tuple(seq)
    return code[root]


def centroids(g: Graph) -> list:
    """The one or two centroid vertices of a tree."""
    adj = g.neighbors()
    n = g.n
    if n == 1:
        return [0]
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best = None
    out = []
    for v in range(n):
        heavy = n - size[v]
        for w in adj[v]:
            if parent[w] == v:
                heavy = max(heavy, size[w])
        if best is None or heavy < best:
            best = heavy
            out = [v]
        elif heavy == best:
            out.append(v)
    return out


def free_canonical_levels(g: Graph) -> tuple:
    """Canonical level sequence of a free tree: root at centroid, lex-max on ties."""
    return max(rooted_canonical_levels(g, c) for c in centroids(g))


def enumerate_free_trees(n: int, cap: int | None = None) -> Iterator[Graph]:
    """Yield every unlabeled free tree of order n exactly once."""
    limit = caps.effective_cap(caps.TREE_CAP) if cap is None else cap
    if n > limit:
        raise CapExceededError(f"n={n} exceeds tree cap {limit}")
    if n < 1:
        return
    if n == 1:
        yield Graph(1)
        return
    levels = list(range(n))
    while levels is not None:
        t = tree_from_level_sequence(levels)
        if list(free_canonical_levels(t)) == levels:
            yield t
        levels = level_sequence_successor(levels)


# ---------------------------------------------------------------------------
# Degree sequences and greedy trees


def is_tree_degree_sequence(seq: Sequence) -> bool:
    """Non-increasing positive integers summing to 2(n-1)."""
    n = len(seq)
    if n < 2:
        return False
    if any(seq[i] < seq[i + 1] for i in range(n - 1)):
        return False
    return all(x >= 1 for x in seq) and sum(seq) == 2 * (n - 1)


def enumerate_tree_degree_sequences(n: int) -> Iterator[tuple]:
    """All partitions of 2(n-1) into exactly n parts >= 1, non-increasing."""
    if n < 2:
        return

    def parts(total, count, high):
        if count == 0:
            if total == 0:
                yield ()
            return
        # each remaining part >= 1
        lo = max(1, total - high * (count - 1))
        hi = min(high, total - (count - 1))
        for first in range(hi, lo - 1, -1):
            for rest in parts(total - first, count - 1, first):
                yield (first,) + rest

    yield from parts(2 * (n - 1), n, n - 1)


@dataclass(frozen=True)
class RootedTree:
    """Parent-array rooted tree; degree[v] counts edges in the whole tree."""

    parent: tuple
    root: int
    degree: tuple

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self) -> list:
        out = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p >= 0:
                out[p].append(v)
        return out

    def to_graph(self) -> Graph:
        return from_edge_list(
            self.n, ((v, p) for v, p in enumerate(self.parent) if p >= 0)
        )

    def to_parent_line(self) -> str:
        """Text form "root;p_0,p_1,...,p_{n-1}" with -1 for the root slot."""
        return f"{self.root};" + ",".join(str(p) for p in self.parent)


def greedy_tree(seq: Sequence) -> RootedTree:
    """Greedy tree of a degree sequence.

    Breadth-first: the root takes the largest degree and that many
    children; each dequeued vertex with assigned degree d takes the next
    d-1 largest unassigned degrees as children.  FIFO queue with children
    attached in non-increasing degree order makes the output
    deterministic.
    """
    seq = tuple(seq)
    if not is_tree_degree_sequence(seq):
        raise NotRealizableError(f"not a tree degree sequence: {seq}")
    n = len(seq)
    parent = [-1] * n
    assigned = [0] * n
    assigned[0] = seq[0]
    next_deg = 1  # degrees are handed out in the given non-increasing order
    queue_head = 0
    queue = [0]
    next_vertex = 1
    while queue_head < len(queue):
        v = queue[queue_head]
        queue_head += 1
        want = assigned[v] - (0 if v == 0 else 1)
        for _ in range(want):
            w = next_vertex
            next_vertex += 1
            parent[w] = v
            assigned[w] = seq[next_deg]
            next_deg += 1
            queue.append(w)
    return RootedTree(parent=tuple(parent), root=0, degree=tuple(assigned))


def subtree_g_values(t: RootedTree) -> dict:
    """g(T_x) for every x, bottom-up via the recursion.

    g(T_x) = -(d(x)-2)^2 + sum over children y of (d(x)-d(y)) + sum of
    g(T_y), with all degrees taken in the whole tree.
    """
    kids = t.children()
    g = {}
    order = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    for v in reversed(order):
        dv = t.degree[v]
        g[v] = (
            -((dv - 2) ** 2)
            + sum(dv - t.degree[y] for y in kids[v])
            + sum(g[y] for y in kids[v])
        )
    return g


def subtree_g_direct(t: RootedTree) -> dict:
    """Direct-summation oracle for g: per subtree, edge sum minus vertex sum."""
    kids = t.children()
    out = {}
    members = {}
    order = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    for v in reversed(order):
        mem = [v]
        for y in kids[v]:
            mem.extend(members[y])
        members[v] = mem
        inside = set(mem)
        edge_sum = sum(
            abs(t.degree[w] - t.degree[t.parent[w]])
            for w in mem
            if t.parent[w] in inside
        )
        vert_sum = sum((t.degree[w] - 2) ** 2 for w in mem)
        out[v] = edge_sum - vert_sum
    return out


@dataclass(frozen=True)
class Delta3Profile:
    """Vertex counts of a tree with maximum degree at most 3."""

    x: int  # degree-3 vertices
    y: int  # degree-2 vertices

    @property
    def leaves(self) -> int:
        return self.x + 2


def delta3_profile(g: Graph) -> Delta3Profile:
    """(x, y) counts for a tree with max degree <= 3; checks n = 2x + y + 2."""
    d = degrees(g)
    if max(d) > 3:
        raise MaxDegreeExceeds3Error(f"max degree {max(d)} > 3")
    x = sum(1 for v in d if v == 3)
    y = sum(1 for v in d if v == 2)
    leaves = sum(1 for v in d if v == 1)
    assert leaves == x + 2 and g.n == 2 * x + y + 2
    return Delta3Profile(x=x, y=y)


# ---------------------------------------------------------------------------
# Export helpers


def parse_parent_line(line: str) -> RootedTree:
    """Inverse of RootedTree.to_parent_line."""
    root_s, parents_s = line.strip().split(";")
    parent = tuple(int(x) for x in parents_s.split(","))
    root = int(root_s)
    g = from_edge_list(len(parent), ((v, p) for v, p in enumerate(parent) if p >= 0))
    return RootedTree(parent=parent, root=root, degree=tuple(degrees(g)))

"""Theorem checkers, greedy-walk search, and exhaustive scans.

Every pass/fail decision is made on cross-multiplied integers; floats
appear only in reported slope fits.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, log

from . import caps
from .errors import (
    CapExceededError,
    DisconnectedError,
    NotATreeError,
    OrderTooSmallError,
    RegularGraphError,
)
from .constructions import ChainParams, extremal_chain
from .graphs import (
    Graph,
    degrees,
    from_edge_list,
    is_connected,
    is_path_graph,
    is_star_graph,
    is_tree,
)
from .graph6 import write_graph6
from .measures import measure_all, sum_centered_squares
from .trees import (
    Delta3Profile,
    delta3_profile,
    enumerate_free_trees,
    enumerate_tree_degree_sequences,
    greedy_tree,
    subtree_g_values,
)


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Check:
    holds: bool
    equality: bool = False
    witness: dict = field(default_factory=dict)


@dataclass
class TheoremReport:
    checks: dict = field(default_factory=dict)

    def add(self, name: str, holds: bool, equality: bool = False, **witness) -> None:
        self.checks[name] = Check(holds=holds, equality=equality, witness=witness)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def failing(self) -> list:
        return [name for name, c in self.checks.items() if not c.holds]

    def as_dict(self) -> dict:
        return {
            name: {"holds": c.holds, "equality": c.equality, **c.witness}
            for name, c in self.checks.items()
        }


# ---------------------------------------------------------------------------
# Tree theorem checks


def check_tree_theorems(t: Graph) -> TheoremReport:
    """All per-tree inequalities, in exact integers."""
    if not is_tree(t):
        raise NotATreeError("input is not a tree")
    if t.n < 3:
        raise OrderTooSmallError(f"need n >= 3, got {t.n}")
    rep = measure_all(t)
    d = degrees(t)
    n = t.n
    s2 = sum_centered_squares(d, 2)
    out = TheoremReport()

    # irr strictly dominates n * Var, i.e. n*irr > sigma_t.
    out.add("n_irr_gt_sigma_t", n * rep.irr > rep.sigma_t,
            lhs=n * rep.irr, rhs=rep.sigma_t)

    # (n-2) sigma >= sigma_t with equality exactly on paths.
    lhs = (n - 2) * rep.sigma
    eq = lhs == rep.sigma_t
    out.add("path_bound", lhs >= rep.sigma_t and eq == is_path_graph(t),
            equality=eq, lhs=lhs, rhs=rep.sigma_t)

    # irr >= sum (d-2)^2 + 2(Delta-2).
    rhs = s2 + 2 * (rep.Delta - 2)
    out.add("greedy_lower_bound", rep.irr >= rhs,
            equality=rep.irr == rhs, lhs=rep.irr, rhs=rhs)

    # Majorization bound: sum (d-2)^2 <= (n-2)(Delta-2) + 2.
    rhs = (n - 2) * (rep.Delta - 2) + 2
    out.add("centered_square_upper", s2 <= rhs,
            equality=s2 == rhs, lhs=s2, rhs=rhs)

    # sigma = sigma_t exactly on stars.
    eq = rep.sigma == rep.sigma_t
    out.add("star_equality", eq == is_star_graph(t), equality=eq,
            sigma=rep.sigma, sigma_t=rep.sigma_t)

    # Max-degree-3 case split on the (x, y) profile.
    if rep.Delta == 3:
        prof = delta3_profile(t)
        x, y = prof.x, prof.y
        if y <= x + 2:
            bound = 4 * (x + 2) - 2 * y
        else:
            bound = 2 * (x + 2)
        out.add("delta3_sigma_bound", rep.sigma >= bound,
                equality=rep.sigma == bound, sigma=rep.sigma, bound=bound,
                x=x, y=y)
    return out


def check_greedy_identity(seq) -> bool:
    """Greedy tree of seq: g-values on the nose and the irr bound with equality."""
    rt = greedy_tree(seq)
    g = subtree_g_values(rt)
    big = max(rt.degree)
    for v in range(rt.n):
        if v == rt.root:
            if g[v] != 2 * (big - 2):
                return False
        elif g[v] != rt.degree[v] - 2:
            return False
    rep = measure_all(rt.to_graph())
    expected = sum((x - 2) ** 2 for x in rt.degree) + 2 * (big - 2)
    return rep.irr == expected


# ---------------------------------------------------------------------------
# Greedy-walk machinery


@dataclass(frozen=True)
class GreedyWalkResult:
    """A delta-to-Delta walk with its greedy increasing degree subsequence."""

    walk: tuple
    r: int
    subsequence: tuple


def replay_greedy_subsequence(g: Graph, walk) -> tuple:
    """Degrees recorded by the running-maximum rule along a walk."""
    d = degrees(g)
    out = [d[walk[0]]]
    for v in walk[1:]:
        if d[v] > out[-1]:
            out.append(d[v])
    return tuple(out)


def min_greedy_walk(g: Graph) -> GreedyWalkResult:
    """Walk minimizing the number of strict threshold increases.

    Shortest-path search over states (vertex, threshold): stepping to a
    neighbor w keeps the threshold at no cost if d(w) <= t and bumps it
    to d(w) at cost 1 otherwise.  Ties broken by fewer walk edges, then
    by the lexicographically smallest walk.
    """
    if not is_connected(g):
        raise DisconnectedError("min_greedy_walk needs a connected graph")
    d = degrees(g)
    lo, hi = min(d), max(d)
    if lo == hi:
        return GreedyWalkResult(walk=(0,), r=0, subsequence=(lo,))
    adj = g.neighbors()

    # Backward Dijkstra: cost from each state to any state with t = hi.
    # States are (v, t) with t a degree value >= d(v).
    thresholds = sorted(set(d))
    rev = {}
    states = []
    for v in range(g.n):
        for t in thresholds:
            if t >= d[v]:
                states.append((v, t))
    for v, t in states:
        for w in adj[v]:
            nxt = (w, t) if d[w] <= t else (w, d[w])
            cost = (0, 1) if d[w] <= t else (1, 1)
            rev.setdefault(nxt, []).append(((v, t), cost))
    dist = {}
    heap = []
    for v in range(g.n):
        heapq.heappush(heap, ((0, 0), (v, hi)))
    while heap:
        cost, st = heapq.heappop(heap)
        if st in dist:
            continue
        dist[st] = cost
        for prev, edge in rev.get(st, ()):
            if prev not in dist:
                heapq.heappush(heap, ((cost[0] + edge[0], cost[1] + edge[1]), prev))

    best = None
    start = None
    for v in range(g.n):
        if d[v] == lo and (v, lo) in dist:
            if best is None or dist[(v, lo)] < best:
                best = dist[(v, lo)]
                start = v
    if start is None:
        raise DisconnectedError("no walk from a minimum-degree vertex reaches the maximum degree")

    # Forward reconstruction of the lexicographically smallest optimal walk.
    walk = [start]
    state = (start, lo)
    remaining = best
    while state[1] != hi:
        v, t = state
        for w in adj[v]:
            if d[w] <= t:
                nxt, cost = (w, t), (0, 1)
            else:
                nxt, cost = (w, d[w]), (1, 1)
            if nxt in dist and (
                dist[nxt][0] + cost[0],
                dist[nxt][1] + cost[1],
            ) == remaining:
                walk.append(w)
                remaining = dist[nxt]
                state = nxt
                break
        else:  # pragma: no cover - dist consistency guarantees progress
            raise AssertionError("walk reconstruction stalled")
    sub = replay_greedy_subsequence(g, walk)
    return GreedyWalkResult(walk=tuple(walk), r=len(sub) - 1, subsequence=sub)


def min_greedy_simple_path(g: Graph, cap: int | None = None) -> GreedyWalkResult:
    """Exact minimum over simple paths from a delta- to a Delta-vertex.

    Exponential DFS, gated by a small-n cap; minimizes (r, length, walk).
    """
    limit = caps.effective_cap(caps.PATH_CAP) if cap is None else cap
    if g.n > limit:
        raise CapExceededError(f"n={g.n} exceeds simple-path cap {limit}")
    if not is_connected(g):
        raise DisconnectedError("min_greedy_simple_path needs a connected graph")
    d = degrees(g)
    lo, hi = min(d), max(d)
    if lo == hi:
        return GreedyWalkResult(walk=(0,), r=0, subsequence=(lo,))
    adj = g.neighbors()
    best = {"key": None}

    def dfs(v, t, r, path, visited):
        bk = best["key"]
        if bk is not None and (r, len(path)) > bk[:2]:
            return
        if t == hi:
            key = (r, len(path), tuple(path))
            if bk is None or key < bk:
                best["key"] = key
            return
        for w in adj[v]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            nt, nr = (d[w], r + 1) if d[w] > t else (t, r)
            dfs(w, nt, nr, path, visited)
            path.pop()
            visited[w] = False

    for v in sorted(range(g.n)):
        if d[v] == lo:
            visited = [False] * g.n
            visited[v] = True
            dfs(v, d[v], 0, [v], visited)
    r, _, walk = best["key"]
    return GreedyWalkResult(walk=walk, r=r,
                            subsequence=replay_greedy_subsequence(g, walk))


def walk_representatives(g: Graph, walk) -> tuple:
    """One vertex per recorded degree: the vertex where each increase happened."""
    d = degrees(g)
    reps = [walk[0]]
    t = d[walk[0]]
    for v in walk[1:]:
        if d[v] > t:
            t = d[v]
            reps.append(v)
    return tuple(reps)


# ---------------------------------------------------------------------------
# Ratio bound checks


def check_ratio_bounds(g: Graph, path_cap: int | None = None) -> TheoremReport:
    """Upper-bound machinery on one connected irregular graph, exact integers."""
    if not is_connected(g):
        raise DisconnectedError("check_ratio_bounds needs a connected graph")
    rep = measure_all(g)
    if rep.sigma == 0:
        raise RegularGraphError("graph is regular")
    n = g.n
    out = TheoremReport()
    wres = min_greedy_walk(g)
    out.add("r_squared_le_6n", wres.r ** 2 <= 6 * n, r=wres.r, n=n)
    gap = rep.Delta - rep.delta
    out.add("sigma_t_trivial_upper",
            rep.sigma_t <= comb(n, 2) * gap * gap,
            sigma_t=rep.sigma_t, bound=comb(n, 2) * gap * gap)
    out.add("ratio_bound_squared",
            2 * rep.sigma_t ** 2 <= 3 * n ** 5 * rep.sigma ** 2,
            lhs=2 * rep.sigma_t ** 2, rhs=3 * n ** 5 * rep.sigma ** 2)
    limit = caps.effective_cap(caps.PATH_CAP) if path_cap is None else path_cap
    if n <= limit:
        pres = min_greedy_simple_path(g, cap=limit)
        reps = walk_representatives(g, pres.walk)
        rset = set(reps)
        adj = g.neighbors()
        crowd = max(sum(1 for w in adj[u] if w in rset) for u in range(n))
        out.add("walk_r_le_path_r", wres.r <= pres.r,
                walk_r=wres.r, path_r=pres.r)
        out.add("path_r_squared_le_6n", pres.r ** 2 <= 6 * n, r=pres.r)
        out.add("path_amgm_lower",
                pres.r * rep.sigma >= gap * gap if pres.r > 0 else rep.sigma >= 0,
                r=pres.r, sigma=rep.sigma, gap_sq=gap * gap)
        out.add("representatives_max_3_neighbours", crowd <= 3,
                crowd=crowd, representatives=list(reps))
    return out


# ---------------------------------------------------------------------------
# Enumeration of labeled connected graphs


def enumerate_connected_labeled_graphs(n: int, cap: int | None = None):
    """All connected labeled graphs on n vertices, by edge-bitmask order."""
    limit = caps.effective_cap(caps.GRAPH_CAP) if cap is None else cap
    if n > limit:
        raise CapExceededError(f"n={n} exceeds labeled-graph cap {limit}")
    if n > 8:
        raise CapExceededError("labeled enumeration supports n <= 8")
    positions = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(positions)):
        pairs = [positions[i] for i in range(len(positions)) if (mask >> i) & 1]
        g = from_edge_list(n, pairs)
        if is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# Scans


@dataclass
class TreeScanSummary:
    n_min: int
    n_max: int
    trees_checked: int = 0
    violations: list = field(default_factory=list)
    path_equality_counts: dict = field(default_factory=dict)
    star_equality_counts: dict = field(default_factory=dict)
    max_ratio_witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.violations:
            return False
        for n in range(max(self.n_min, 3), self.n_max + 1):
            if self.path_equality_counts.get(n) != 1:
                return False
            if self.star_equality_counts.get(n) != 1:
                return False
        return True

    def as_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "trees_checked": self.trees_checked,
            "violations": self.violations,
            "path_equality_counts": self.path_equality_counts,
            "star_equality_counts": self.star_equality_counts,
            "max_ratio_witness": self.max_ratio_witness,
            "ok": self.ok,
        }


def exhaustive_tree_scan(n_min: int, n_max: int, cap: int | None = None) -> TreeScanSummary:
    """Run every per-tree check over all free trees with n_min <= n <= n_max."""
    summary = TreeScanSummary(n_min=n_min, n_max=n_max)
    for n in range(max(n_min, 3), n_max + 1):
        path_eq = star_eq = 0
        best_ratio = None
        for t in enumerate_free_trees(n, cap=cap):
            summary.trees_checked += 1
            report = check_tree_theorems(t)
            if not report.all_hold:
                summary.violations.append(
                    {"graph6": write_graph6(t), "failed": report.failing()}
                )
            if report.checks["path_bound"].equality:
                path_eq += 1
            if report.checks["star_equality"].equality:
                star_eq += 1
            rep = measure_all(t)
            if rep.sigma > 0:
                rat = Fraction(rep.sigma_t, rep.sigma)
                if best_ratio is None or rat > best_ratio[0]:
                    best_ratio = (rat, write_graph6(t))
        summary.path_equality_counts[n] = path_eq
        summary.star_equality_counts[n] = star_eq
        if best_ratio is not None:
            summary.max_ratio_witness[n] = {
                "ratio_num": best_ratio[0].numerator,
                "ratio_den": best_ratio[0].denominator,
                "graph6": best_ratio[1],
            }
    return summary


@dataclass
class GreedyScanSummary:
    n_max: int
    minimality_n_max: int
    sequences_checked: int = 0
    minimality_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "minimality_n_max": self.minimality_n_max,
            "sequences_checked": self.sequences_checked,
            "minimality_checked": self.minimality_checked,
            "violations": self.violations,
            "ok": self.ok,
        }


def greedy_scan(n_max: int, minimality_n_max: int = 12) -> GreedyScanSummary:
    """Greedy identity for all sequences up to n_max; irr-minimality up to
    minimality_n_max (checked against full free-tree enumeration)."""
    summary = GreedyScanSummary(n_max=n_max, minimality_n_max=minimality_n_max)
    for n in range(2, n_max + 1):
        min_irr = {}
        if n <= minimality_n_max:
            for t in enumerate_free_trees(n):
                key = tuple(sorted(degrees(t), reverse=True))
                v = measure_all(t).irr
                if key not in min_irr or v < min_irr[key]:
                    min_irr[key] = v
        for seq in enumerate_tree_degree_sequences(n):
            summary.sequences_checked += 1
            if not check_greedy_identity(seq):
                summary.violations.append({"seq": list(seq), "failed": "greedy_identity"})
                continue
            if n <= minimality_n_max:
                summary.minimality_checked += 1
                got = measure_all(greedy_tree(seq).to_graph()).irr
                if seq not in min_irr:
                    summary.violations.append(
                        {"seq": list(seq), "failed": "sequence_not_realized"}
                    )
                elif got != min_irr[seq]:
                    summary.violations.append(
                        {"seq": list(seq), "failed": "irr_minimality",
                         "greedy_irr": got, "min_irr": min_irr[seq]}
                    )
    return summary


def ratio_scan(k_list, s: int = 0):
    """Chain ratio table and the log-log slope of ratio versus order.

    Returns (rows, slope): each row is a dict with k, n, sigma, sigma_t,
    exact ratio, and the float ratio / n^{5/2}.
    """
    rows = []
    xs = []
    ys = []
    for k in k_list:
        g = extremal_chain(ChainParams(k=k, s=s))
        rep = measure_all(g)
        rat = Fraction(rep.sigma_t, rep.sigma)
        rows.append(
            {
                "k": k,
                "n": rep.n,
                "sigma": rep.sigma,
                "sigma_t": rep.sigma_t,
                "ratio_num": rat.numerator,
                "ratio_den": rat.denominator,
                "ratio_over_n52": float(rat) / rep.n ** 2.5,
            }
        )
        xs.append(log(rep.n))
        ys.append(log(float(rat)))
    slope = _least_squares_slope(xs, ys)
    return rows, slope


def _least_squares_slope(xs, ys) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def loglog_slope(pairs) -> float:
    """Least-squares slope of ln(y) against ln(x)."""
    xs = [log(x) for x, _ in pairs]
    ys = [log(float(y)) for _, y in pairs]
    return _least_squares_slope(xs, ys)

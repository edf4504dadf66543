"""Hot inner loops: the labeled-graph bound scan and the Prüfer oracle.

Two backends share one public surface.  The numba backend JIT-compiles
tight per-graph loops; the numpy backend runs a vectorized batch
formulation.  Selection: IRRLAB_BACKEND=numba|numpy, defaulting to numba
when importable.  Results are backend-independent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - mirror always has numba
    numba = None
    HAS_NUMBA = False


def active_backend() -> str:
    """Backend chosen by IRRLAB_BACKEND, defaulting to numba when present."""
    choice = os.environ.get("IRRLAB_BACKEND", "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba" and not HAS_NUMBA:
            raise RuntimeError("IRRLAB_BACKEND=numba but numba is not importable")
        return choice
    return "numba" if HAS_NUMBA else "numpy"


def _edge_positions(n: int):
    us, vs = [], []
    for u in range(n):
        for v in range(u + 1, n):
            us.append(u)
            vs.append(v)
    return np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64)


# ---------------------------------------------------------------------------
# Connected labeled-graph bound scan


@dataclass(frozen=True)
class ScanResult:
    """Aggregate of the bound checks over all connected labeled graphs."""

    n: int
    connected: int
    viol_r_bound: int        # r^2 <= 6n failures
    viol_trivial_upper: int  # sigma_t <= C(n,2)(Delta-delta)^2 failures
    viol_ratio_bound: int    # 2 sigma_t^2 <= 3 n^5 sigma^2 failures (irregular only)
    max_r: int

    @property
    def ok(self) -> bool:
        return not (self.viol_r_bound or self.viol_trivial_upper or self.viol_ratio_bound)


def _scan_mask_range(n, start, stop, us, vs):
    """Per-mask loop; written in numba-compatible style, compiled on demand."""
    nedges = us.shape[0]
    full = (np.int64(1) << n) - 1
    nbr = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    vis = np.zeros((n, n + 1), dtype=np.uint8)
    qv = np.zeros(n * (n + 1), dtype=np.int64)
    qt = np.zeros(n * (n + 1), dtype=np.int64)
    nqv = np.zeros(n * (n + 1), dtype=np.int64)
    nqt = np.zeros(n * (n + 1), dtype=np.int64)
    out = np.zeros(5, dtype=np.int64)  # connected, viol_a, viol_b, viol_c, max_r
    for mask in range(start, stop):
        for v in range(n):
            nbr[v] = 0
        for e in range(nedges):
            if (mask >> e) & 1:
                nbr[us[e]] |= np.int64(1) << vs[e]
                nbr[vs[e]] |= np.int64(1) << us[e]
        # connectivity via bitmask BFS from vertex 0
        visited = np.int64(1)
        frontier = np.int64(1)
        while frontier != 0:
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= nbr[v]
            frontier = nxt & ~visited
            visited |= frontier
        if visited != full:
            continue
        out[0] += 1
        delta = n
        Delta = 0
        for v in range(n):
            c = 0
            b = nbr[v]
            while b:
                b &= b - 1
                c += 1
            deg[v] = c
            if c < delta:
                delta = c
            if c > Delta:
                Delta = c
        sigma = np.int64(0)
        sigma_t = np.int64(0)
        s1 = np.int64(0)
        s2 = np.int64(0)
        for v in range(n):
            s1 += deg[v]
            s2 += deg[v] * deg[v]
        sigma_t = n * s2 - s1 * s1
        for e in range(nedges):
            if (mask >> e) & 1:
                diff = deg[us[e]] - deg[vs[e]]
                sigma += diff * diff
        # minimum number of greedy threshold increases, BFS over (v, t)
        if delta == Delta:
            r = 0
        else:
            for v in range(n):
                for t in range(n + 1):
                    vis[v, t] = 0
            qlen = 0
            for v in range(n):
                if deg[v] == delta:
                    vis[v, delta] = 1
                    qv[qlen] = v
                    qt[qlen] = delta
                    qlen += 1
            r = 0
            while True:
                found = False
                qi = 0
                while qi < qlen:
                    v = qv[qi]
                    t = qt[qi]
                    qi += 1
                    if t == Delta:
                        found = True
                    for w in range(n):
                        if (nbr[v] >> w) & 1 and deg[w] <= t and vis[w, t] == 0:
                            vis[w, t] = 1
                            qv[qlen] = w
                            qt[qlen] = t
                            qlen += 1
                if found:
                    break
                nqlen = 0
                for qi in range(qlen):
                    v = qv[qi]
                    t = qt[qi]
                    for w in range(n):
                        if (nbr[v] >> w) & 1 and deg[w] > t and vis[w, deg[w]] == 0:
                            vis[w, deg[w]] = 1
                            nqv[nqlen] = w
                            nqt[nqlen] = deg[w]
                            nqlen += 1
                for qi in range(nqlen):
                    qv[qi] = nqv[qi]
                    qt[qi] = nqt[qi]
                qlen = nqlen
                r += 1
        if r > out[4]:
            out[4] = r
        if r * r > 6 * n:
            out[1] += 1
        gap = Delta - delta
        if sigma_t > (n * (n - 1) // 2) * gap * gap:
            out[2] += 1
        if sigma > 0 and 2 * sigma_t * sigma_t > 3 * n ** 5 * sigma * sigma:
            out[3] += 1
    return out


_scan_mask_range_jit = None


def _get_scan_jit():
    global _scan_mask_range_jit
    if _scan_mask_range_jit is None:
        _scan_mask_range_jit = numba.njit(cache=True, nogil=True)(_scan_mask_range)
    return _scan_mask_range_jit


def _scan_numpy(n: int, chunk: int = 1 << 15) -> np.ndarray:
    """Vectorized batch formulation of the same scan."""
    us, vs = _edge_positions(n)
    nedges = len(us)
    total_masks = 1 << nedges
    out = np.zeros(5, dtype=np.int64)
    tvals = np.arange(n, dtype=np.int64)
    for startm in range(0, total_masks, chunk):
        masks = np.arange(startm, min(startm + chunk, total_masks), dtype=np.int64)
        B = len(masks)
        bits = ((masks[:, None] >> np.arange(nedges)) & 1).astype(np.uint8)
        A = np.zeros((B, n, n), dtype=np.uint8)
        A[:, us, vs] = bits
        A[:, vs, us] = bits
        Af = A.astype(np.float32)
        reach = np.broadcast_to(np.eye(n, dtype=np.float32), (B, n, n)).copy()
        for _ in range(n):
            reach = np.minimum(reach + reach @ Af, 1.0)
        conn = (reach[:, 0, :] > 0).all(axis=1)
        if not conn.any():
            continue
        idx = np.nonzero(conn)[0]
        A = A[idx]
        Af = Af[idx]
        bits = bits[idx]
        B = len(idx)
        D = A.sum(axis=2).astype(np.int64)
        delta = D.min(axis=1)
        Delta = D.max(axis=1)
        diff = (D[:, us] - D[:, vs]).astype(np.int64)
        sigma = (bits * diff * diff).sum(axis=1)
        sigma_t = n * (D * D).sum(axis=1) - D.sum(axis=1) ** 2
        # threshold-state propagation for r
        S = np.zeros((B, n, n), dtype=bool)  # S[b, t, v]
        rows = np.arange(B)[:, None]
        cols = np.arange(n)[None, :]
        S[rows, D, cols] = D == delta[:, None]
        admissible = D[:, None, :] <= tvals[None, :, None]  # d(target) <= t
        r = np.full(B, -1, dtype=np.int64)
        for level in range(n + 1):
            while True:
                P = (S.astype(np.float32) @ Af) > 0
                grown = S | (P & admissible)
                if (grown == S).all():
                    break
                S = grown
            reached = S[np.arange(B), Delta, :].any(axis=1)
            hit = (r < 0) & reached
            r[hit] = level
            if (r >= 0).all():
                break
            P = (S.astype(np.float32) @ Af) > 0
            gained = (P & ~admissible).any(axis=1)  # entered w with d(w) > t
            S2 = np.zeros_like(S)
            S2[rows, D, cols] = gained
            S = S | S2
        out[0] += B
        out[1] += int((r * r > 6 * n).sum())
        gap = Delta - delta
        out[2] += int((sigma_t > (n * (n - 1) // 2) * gap * gap).sum())
        irregular = sigma > 0
        out[3] += int(
            (2 * sigma_t[irregular] ** 2 > 3 * n ** 5 * sigma[irregular] ** 2).sum()
        )
        out[4] = max(out[4], int(r.max(initial=0)))
    return out


def scan_connected_graphs(n: int, backend: str | None = None,
                          jobs: int = 1) -> ScanResult:
    """Check the three ratio bounds over every connected labeled graph on n
    vertices; returns aggregate counts (zero violations expected)."""
    if n < 1 or n > 8:
        raise ValueError("scan supports 1 <= n <= 8")
    be = backend or active_backend()
    us, vs = _edge_positions(n)
    total = 1 << len(us)
    if be == "numpy":
        out = _scan_numpy(n)
    elif jobs > 1:
        fn = _get_scan_jit()
        from concurrent.futures import ThreadPoolExecutor

        step = (total + jobs - 1) // jobs
        ranges = [(a, min(a + step, total)) for a in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(lambda ab: fn(n, ab[0], ab[1], us, vs), ranges)
            )
        out = np.zeros(5, dtype=np.int64)
        for p in parts:
            out[:4] += p[:4]
            out[4] = max(out[4], p[4])
    else:
        out = _get_scan_jit()(n, 0, total, us, vs)
    return ScanResult(
        n=n,
        connected=int(out[0]),
        viol_r_bound=int(out[1]),
        viol_trivial_upper=int(out[2]),
        viol_ratio_bound=int(out[3]),
        max_r=int(out[4]),
    )


# ---------------------------------------------------------------------------
# Prüfer oracle: count free trees by canonical-code dedup over all labeled trees


def _prufer_distinct_codes(n, table, powB, repunit):
    """Iterate all n^(n-2) Prüfer sequences; insert each tree's canonical
    code into the open-address table; return the number of distinct codes.

    Codes pack the centroid-rooted canonical level sequence base n+1 into
    one int64 (digits are levels + 1, children sorted by padded key).
    """
    B = n + 1
    seq = np.zeros(max(n - 2, 1), dtype=np.int64)
    parent = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    stack = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    eu = np.zeros(n - 1, dtype=np.int64)
    ev = np.zeros(n - 1, dtype=np.int64)
    adj = np.zeros((n, n), dtype=np.int64)
    nadj = np.zeros(n, dtype=np.int64)
    size = np.zeros(n, dtype=np.int64)
    exact = np.zeros(n, dtype=np.int64)
    length = np.zeros(n, dtype=np.int64)
    ck = np.zeros(n, dtype=np.int64)
    ce = np.zeros(n, dtype=np.int64)
    cl = np.zeros(n, dtype=np.int64)
    tsize = table.shape[0]
    distinct = 0
    total = 1
    for _ in range(n - 2):
        total *= n
    for it in range(total):
        # decode Prüfer sequence to edges (pointer method)
        for v in range(n):
            deg[v] = 1
        for i in range(n - 2):
            deg[seq[i]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for i in range(n - 2):
            v = seq[i]
            eu[i] = leaf
            ev[i] = v
            deg[v] -= 1
            if deg[v] == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        eu[n - 2] = leaf
        ev[n - 2] = n - 1
        # adjacency lists
        for v in range(n):
            nadj[v] = 0
        for i in range(n - 1):
            a = eu[i]
            b = ev[i]
            adj[a, nadj[a]] = b
            nadj[a] += 1
            adj[b, nadj[b]] = a
            nadj[b] += 1
        # centroid(s): subtree sizes from a DFS rooted at 0
        top = 0
        stack[top] = 0
        top += 1
        parent[0] = -1
        cnt = 0
        while top > 0:
            top -= 1
            v = stack[top]
            order[cnt] = v
            cnt += 1
            for j in range(nadj[v]):
                w = adj[v, j]
                if w != parent[v]:
                    parent[w] = v
                    stack[top] = w
                    top += 1
        for v in range(n):
            size[v] = 1
        for i in range(n - 1, 0, -1):
            size[parent[order[i]]] += size[order[i]]
        best = n + 1
        c1 = -1
        c2 = -1
        for v in range(n):
            heavy = n - size[v]
            for j in range(nadj[v]):
                w = adj[v, j]
                if w != parent[v] and size[w] > heavy:
                    heavy = size[w]
            if heavy < best:
                best = heavy
                c1 = v
                c2 = -1
            elif heavy == best:
                c2 = v
        # canonical code rooted at each centroid; keep the larger
        code = 0
        for which in range(2):
            root = c1 if which == 0 else c2
            if root < 0:
                continue
            top = 0
            stack[top] = root
            top += 1
            parent[root] = -1
            cnt = 0
            while top > 0:
                top -= 1
                v = stack[top]
                order[cnt] = v
                cnt += 1
                for j in range(nadj[v]):
                    w = adj[v, j]
                    if w != parent[v]:
                        parent[w] = v
                        stack[top] = w
                        top += 1
            for i in range(n - 1, -1, -1):
                v = order[i]
                nk = 0
                for j in range(nadj[v]):
                    w = adj[v, j]
                    if w != parent[v]:
                        le = length[w]
                        ex = exact[w] + repunit[le]  # all levels + 1
                        ck[nk] = ex * powB[n - le]
                        ce[nk] = ex
                        cl[nk] = le
                        nk += 1
                # insertion sort, descending padded key
                for a in range(1, nk):
                    kk = ck[a]
                    ee = ce[a]
                    ll = cl[a]
                    b = a - 1
                    while b >= 0 and ck[b] < kk:
                        ck[b + 1] = ck[b]
                        ce[b + 1] = ce[b]
                        cl[b + 1] = cl[b]
                        b -= 1
                    ck[b + 1] = kk
                    ce[b + 1] = ee
                    cl[b + 1] = ll
                acc = 1  # the vertex's own digit: level 0, stored as 1
                ln = 1
                for a in range(nk):
                    acc = acc * powB[cl[a]] + ce[a]
                    ln += cl[a]
                exact[v] = acc
                length[v] = ln
            if exact[root] > code:
                code = exact[root]
        # open-addressing insert
        h = code % tsize
        while True:
            cur = table[h]
            if cur == code:
                break
            if cur == 0:
                table[h] = code
                distinct += 1
                break
            h = (h + 1) % tsize
        # odometer
        i = n - 3
        while i >= 0:
            seq[i] += 1
            if seq[i] < n:
                break
            seq[i] = 0
            i -= 1
    return distinct


_prufer_jit = None


def _get_prufer_impl(backend: str):
    global _prufer_jit
    if backend == "numba":
        if _prufer_jit is None:
            _prufer_jit = numba.njit(cache=True)(_prufer_distinct_codes)
        return _prufer_jit
    return _prufer_distinct_codes


def prufer_free_tree_count(n: int, backend: str | None = None) -> int:
    """Number of distinct free trees of order n, by exhaustive labeled-tree
    generation from Prüfer sequences plus canonical-form dedup."""
    if n < 1:
        return 0
    if n <= 2:
        return 1
    if n > 12:
        raise ValueError("Prüfer oracle supports n <= 12")
    be = backend or active_backend()
    B = n + 1
    powB = np.ones(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        powB[i] = powB[i - 1] * B
    repunit = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        repunit[i] = repunit[i - 1] * B + 1
    table = np.zeros(1 << 16, dtype=np.int64)
    impl = _get_prufer_impl(be if be == "numba" else "python")
    return int(impl(n, table, powB, repunit))

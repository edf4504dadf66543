#!/usr/bin/env python3
"""Compare the numba and numpy backends on the hot kernels.

Usage: python3 benchmarks/bench_scan.py [--n-max 6] [--prufer-n 8]
"""

import argparse
import time

from irrlab.kernels import (
    HAS_NUMBA,
    prufer_free_tree_count,
    scan_connected_graphs,
)


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=6,
                    help="largest connected-graph scan order to benchmark")
    ap.add_argument("--prufer-n", type=int, default=8,
                    help="order for the Prufer oracle benchmark")
    args = ap.parse_args()

    backends = ["numpy"]
    if HAS_NUMBA:
        # warm up the JIT so compile time is not billed to the first row
        scan_connected_graphs(3, backend="numba")
        prufer_free_tree_count(4, backend="numba")
        backends.insert(0, "numba")

    print(f"{'kernel':<28} {'backend':<8} {'result':>10} {'seconds':>10}")
    for n in range(4, args.n_max + 1):
        for be in backends:
            res, dt = timed(scan_connected_graphs, n, backend=be)
            print(f"{'graph scan n=' + str(n):<28} {be:<8} "
                  f"{res.connected:>10} {dt:>10.3f}")
    for be in backends:
        cnt, dt = timed(prufer_free_tree_count, args.prufer_n, backend=be)
        print(f"{'prufer oracle n=' + str(args.prufer_n):<28} {be:<8} "
              f"{cnt:>10} {dt:>10.3f}")


if __name__ == "__main__":
    main()

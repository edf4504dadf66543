"""Command-line surface: measure, construct, enumerate, verify.

Exit codes: 0 success / all checks pass, 1 any theorem violation
(witnesses on stderr), 2 usage error (argparse default).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import caps
from .constructions import (
    ChainParams,
    extremal_chain_with_manifest,
    near_regular_block,
    quadratic_example,
    side_block,
)
from .errors import IrrlabError
from .graphs import Graph, from_edge_list_text, to_edge_list_text
from .graph6 import parse_graph6_lines, write_graph6
from .kernels import active_backend, scan_connected_graphs
from .measures import CSV_FIELDS, measure_all
from .trees import enumerate_free_trees, greedy_tree
from .verify import exhaustive_tree_scan, greedy_scan, ratio_scan


def _read_graphs(path: str) -> list:
    """Load graphs from a file or '-' (stdin); graph6 or edge-list, auto-detected."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    head = text.lstrip().split("\n", 1)[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        try:
            return [from_edge_list_text(text)]
        except (ValueError, IrrlabError):
            pass
    return parse_graph6_lines(text)


def _emit_graph(g: Graph, fmt: str, manifest=None) -> None:
    if fmt == "g6":
        print(write_graph6(g))
    elif fmt == "edges":
        sys.stdout.write(to_edge_list_text(g))
    elif fmt == "json":
        payload = {"graph6": write_graph6(g), "n": g.n, "m": g.m}
        if manifest is not None:
            payload["manifest"] = manifest.as_dict()
        print(json.dumps(payload, indent=2))
    else:
        raise ValueError(f"unknown output format {fmt!r}")


def _parse_degrees(text: str) -> tuple:
    return tuple(int(tok) for tok in text.replace(" ", "").split(","))


def _parse_k_list(text: str) -> list:
    return [int(tok) for tok in text.replace(" ", "").split(",")]


def cmd_measure(args) -> int:
    graphs = _read_graphs(args.infile)
    reports = [measure_all(g) for g in graphs]
    if args.out == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        print(",".join(CSV_FIELDS))
        for r in reports:
            print(r.as_csv_row())
    return 0


def cmd_enumerate_trees(args) -> int:
    cap = args.unsafe_cap if args.unsafe_cap else None
    for t in enumerate_free_trees(args.n, cap=cap):
        print(write_graph6(t))
    return 0


def cmd_greedy(args) -> int:
    rt = greedy_tree(_parse_degrees(args.degrees))
    if args.out == "g6":
        print(write_graph6(rt.to_graph()))
    elif args.out == "json":
        print(json.dumps({
            "graph6": write_graph6(rt.to_graph()),
            "parent_line": rt.to_parent_line(),
            "degrees": list(rt.degree),
        }, indent=2))
    else:
        print(rt.to_parent_line())
    return 0


def cmd_construct(args) -> int:
    manifest = None
    if args.family == "chain":
        g, manifest = extremal_chain_with_manifest(
            ChainParams(k=args.k, s=args.s, odd_order=args.odd)
        )
    elif args.family == "block":
        g = near_regular_block(args.k, args.r)
    elif args.family == "side":
        g = side_block(args.n, args.r)
    else:
        g = quadratic_example(args.n)
    _emit_graph(g, args.out, manifest=manifest)
    return 0


def cmd_verify_trees(args) -> int:
    cap = args.unsafe_cap if args.unsafe_cap else None
    summary = exhaustive_tree_scan(args.n_min, args.n_max, cap=cap)
    print(json.dumps(summary.as_dict(), indent=2))
    if not summary.ok:
        for v in summary.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    return 0


def cmd_verify_graphs(args) -> int:
    results = []
    ok = True
    for n in range(2, args.n_max + 1):
        res = scan_connected_graphs(n, jobs=args.jobs)
        results.append(
            {
                "n": n,
                "connected": res.connected,
                "viol_r_bound": res.viol_r_bound,
                "viol_trivial_upper": res.viol_trivial_upper,
                "viol_ratio_bound": res.viol_ratio_bound,
                "max_r": res.max_r,
                "ok": res.ok,
            }
        )
        ok = ok and res.ok
    print(json.dumps({"backend": active_backend(), "results": results, "ok": ok},
                     indent=2))
    return 0 if ok else 1


def cmd_verify_greedy(args) -> int:
    summary = greedy_scan(args.n_max, minimality_n_max=args.minimality_n_max)
    print(json.dumps(summary.as_dict(), indent=2))
    if not summary.ok:
        for v in summary.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    return 0


def cmd_ratio_scan(args) -> int:
    rows, slope = ratio_scan(_parse_k_list(args.k_list), s=args.s)
    if args.out == "csv":
        fields = ["k", "n", "sigma", "sigma_t", "ratio_num", "ratio_den",
                  "ratio_over_n52"]
        print(",".join(fields))
        for row in rows:
            print(",".join(str(row[f]) for f in fields))
        print(f"# slope,{slope}")
    else:
        print(json.dumps({"rows": rows, "slope": slope}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="irrlab",
        description="Graph irregularity measures, extremal constructions, "
                    "and exhaustive desk-scale verification.",
    )
    ap.add_argument("--timing", action="store_true",
                    help="print elapsed wall time to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="measure graphs from a file or stdin")
    p.add_argument("--in", dest="infile", default="-",
                   help="graph6 or edge-list input ('-' for stdin)")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("enumerate", help="enumerate combinatorial families")
    esub = p.add_subparsers(dest="what", required=True)
    pt = esub.add_parser("trees", help="all free trees of order n, as graph6")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--unsafe-cap", type=int, default=0,
                    help="override the tree enumeration cap")
    pt.set_defaults(fn=cmd_enumerate_trees)

    p = sub.add_parser("greedy", help="greedy tree of a degree sequence")
    p.add_argument("--degrees", required=True,
                   help="comma-separated non-increasing degrees, e.g. 3,2,2,1,1,1")
    p.add_argument("--out", choices=("parent", "g6", "json"), default="parent")
    p.set_defaults(fn=cmd_greedy)

    p = sub.add_parser("construct", help="build an extremal family member")
    csub = p.add_subparsers(dest="family", required=True)
    pc = csub.add_parser("chain", help="the chained near-regular construction")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--s", type=int, default=0)
    pc.add_argument("--odd", action="store_true",
                    help="odd-order variant (modified degree-4 block)")
    pc.add_argument("--out", choices=("g6", "edges", "json"), default="g6")
    pc.set_defaults(fn=cmd_construct)
    pb = csub.add_parser("block", help="near-regular block of order k, degree r")
    pb.add_argument("--k", type=int, required=True)
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument("--out", choices=("g6", "edges", "json"), default="g6")
    pb.set_defaults(fn=cmd_construct)
    ps = csub.add_parser("side", help="odd-order side block of order n, degree r")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--r", type=int, required=True)
    ps.add_argument("--out", choices=("g6", "edges", "json"), default="g6")
    ps.set_defaults(fn=cmd_construct)
    pq = csub.add_parser("quadratic", help="path joined to a near-complete graph")
    pq.add_argument("--n", type=int, required=True)
    pq.add_argument("--out", choices=("g6", "edges", "json"), default="g6")
    pq.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="run a theorem verification scan")
    vsub = p.add_subparsers(dest="target", required=True)
    pv = vsub.add_parser("trees", help="all free trees in an order range")
    pv.add_argument("--n-min", type=int, default=3)
    pv.add_argument("--n-max", type=int, default=12)
    pv.add_argument("--unsafe-cap", type=int, default=0)
    pv.set_defaults(fn=cmd_verify_trees)
    pg = vsub.add_parser("graphs", help="all connected labeled graphs up to n-max")
    pg.add_argument("--n-max", type=int, default=caps.GRAPH_CAP)
    pg.add_argument("--jobs", type=int, default=1)
    pg.set_defaults(fn=cmd_verify_graphs)
    pe = vsub.add_parser("greedy", help="greedy identity and irr minimality")
    pe.add_argument("--n-max", type=int, default=16)
    pe.add_argument("--minimality-n-max", type=int, default=12)
    pe.set_defaults(fn=cmd_verify_greedy)

    p = sub.add_parser("ratio-scan", help="chain ratio table and log-log slope")
    p.add_argument("--k-list", default="10,12,14,16,18,20,22,24,26")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_ratio_scan)
    return ap


def run(argv) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.monotonic()
    try:
        code = args.fn(args)
    except IrrlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

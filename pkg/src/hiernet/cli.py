"""Command-line interface: ``hiernet {generate,stats,verify,dist,sweep}``.

Exit status: 0 on success, 1 when a verification or match check fails,
2 for usage errors (bad flags, bad parameters, graph above the cap).
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import formats
from .analytic import analytic_report
from .core import (
    DEFAULT_CAP,
    BudgetExceeded,
    LabelError,
    ParamError,
    check_budget,
    encode,
    enumerate_edges,
    parse_label,
    validate_params,
)
from .empirical import bfs_distances, empirical_report
from .oracle import distance
from .verify import compare_reports, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@contextlib.contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as fh:
            yield fh


def _params(args):
    try:
        return validate_params(args.n, args.k)
    except ParamError as exc:
        raise UsageError(str(exc)) from None


def _budget(params, cap):
    try:
        check_budget(params, cap)
    except BudgetExceeded as exc:
        raise UsageError(f"{exc} (try `hiernet stats --mode analytic` or `hiernet dist`)") from None


def cmd_generate(args) -> int:
    params = _params(args)
    _budget(params, args.cap)
    graph = enumerate_edges(params, args.cap)
    with _open_out(args.output) as out:
        if args.format == "dot":
            formats.write_dot(graph, out)
        else:
            formats.write_edgelist(graph, out)
    return EXIT_OK


def _print_text(doc: dict, out) -> None:
    for key, value in doc.items():
        if key == "class_stats":
            out.write("class_stats:\n")
            for row in value:
                out.write(
                    f"  {row['class']:<15}{row['level']:>4}  count={row['count']}  "
                    f"degree={row['degree']}  clustering={row['clustering']['exact']}\n"
                )
        elif key in ("empirical", "match"):
            out.write(f"{key}:\n")
            for sub, v in value.items():
                out.write(f"  {sub}: {json.dumps(v)}\n")
        else:
            out.write(f"{key}: {json.dumps(value)}\n")


def cmd_stats(args) -> int:
    params = _params(args)
    if args.mode != "analytic":
        _budget(params, args.cap)
    a = analytic_report(params)
    e = match = None
    if args.mode != "analytic":
        e = empirical_report(enumerate_edges(params, args.cap))
        match = compare_reports(a, e)
    doc = formats.report_dict(a, e, match)
    if args.mode == "empirical":
        doc = {"params": doc["params"], "empirical": doc["empirical"]}
        match = None
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        _print_text(doc, sys.stdout)
    if match is not None and not all(match.values()):
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params(args)
    _budget(params, args.cap)
    results = run_suite(params, args.cap)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status}"
        if r.detail:
            line += f"  {r.detail}"
        print(line)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"first counterexample: {failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_dist(args) -> int:
    params = _params(args)
    try:
        x = parse_label(args.source, params)
        y = parse_label(args.target, params)
    except LabelError as exc:
        raise UsageError(str(exc)) from None
    d = distance(x, y, params)
    print(d)
    if args.check_bfs:
        _budget(params, args.cap)
        graph = enumerate_edges(params, args.cap)
        bfs = bfs_distances(graph, encode(x, params))[encode(y, params)]
        if bfs != d:
            print(f"oracle distance {d} != BFS distance {bfs}", file=sys.stderr)
            return EXIT_FAIL
        print(f"BFS agrees: {bfs}", file=sys.stderr)
    return EXIT_OK


def _parse_range(text: str, parts: int) -> tuple[int, ...]:
    pieces = text.split(":")
    if len(pieces) != parts:
        raise UsageError(f"range {text!r} must have {parts} colon-separated integers")
    try:
        return tuple(int(p) for p in pieces)
    except ValueError:
        raise UsageError(f"range {text!r} must contain integers") from None


def cmd_sweep(args) -> int:
    try:
        spec = formats.SweepSpec(
            _parse_range(args.n_range, 3), _parse_range(args.k_range, 2), args.metric
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with _open_out(args.output) as out:
        formats.run_sweep(spec, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiernet", description="Hierarchical small-world scale-free graphs H(n,k)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(p):
        p.add_argument("-n", type=int, required=True, help="order of the seed complete graph")
        p.add_argument("-k", type=int, required=True, help="number of levels")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max vertices to materialize (default 2^20)")

    p = sub.add_parser("generate", help="write the graph as an edge list or DOT")
    nk(p)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("stats", help="closed-form and/or measured metrics")
    nk(p)
    p.add_argument("--mode", choices=["analytic", "empirical", "both"], default="analytic")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run every invariant check on a materialized graph")
    nk(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dist", help="distance between two labels")
    nk(p)
    p.add_argument("--from", dest="source", required=True, help="label, e.g. 012 or 0,11,3 for n > 10")
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--check-bfs", action="store_true", help="confirm with a BFS on the built graph")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("sweep", help="CSV of an analytic metric over an (n, k) grid")
    p.add_argument("--n-range", required=True, help="START:STOP:STEP, inclusive")
    p.add_argument("--k-range", default="1:1", help="START:STOP, inclusive (default 1:1)")
    p.add_argument("--metric", required=True, choices=formats.SWEEP_METRICS)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hiernet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line harness.

Exit codes: 0 clean, 1 operational error, 2 conjecture violation found
(the headline scientific output), 3 theorem violation (an implementation
bug, kept distinct so CI can tell science from defects).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import SLACK_TOL, UnknownBoundError, check_graph
from .graphs import (FamilyError, FamilySpec, Graph6Error, enumerate_labeled,
                     make_family, parse_graph6, stream_from_file,
                     stream_from_lines, to_graph6)
from .invariants import CHI_DEFAULT_CAP, collect_invariants
from .report import fmt_float, save_report, write_report
from .scan import (EXIT_CLEAN, EXIT_ERROR, ScanReport, run_scan,
                   subgraph_monotonicity_scan)
from .search import SearchConfig, make_objective, optimize


def _add_report_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--report", metavar="PATH", help="write the report here")
    p.add_argument("--format", choices=("jsonl", "csv", "summary"),
                   default="summary", help="report format (default summary)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ngbounds",
        description="Spectral graph bound verification: eigenvalue power "
                    "sums, Nordhaus-Gaddum inequalities, extremal search.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    scan = sub.add_parser("scan", help="check a graph stream against the catalog")
    src = scan.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="sweep all labeled graphs on n vertices")
    src.add_argument("--input", metavar="FILE.g6", help="graph6 file")
    src.add_argument("--stdin", action="store_true", help="graph6 lines on stdin")
    scan.add_argument("--bounds", default="all",
                      help="'all' or comma-separated bound ids")
    scan.add_argument("--tol", type=float, default=SLACK_TOL)
    scan.add_argument("--jobs", type=int, default=1)
    scan.add_argument("--chi-cap", type=int, default=CHI_DEFAULT_CAP)
    scan.add_argument("--enum-cap", type=int, default=8,
                      help="labeled enumeration refusal threshold")
    _add_report_args(scan)

    family = sub.add_parser("family", help="build a named family graph")
    family.add_argument("--kind", required=True)
    family.add_argument("--params", required=True,
                        help="comma-separated positive integers")
    family.add_argument("--chi-cap", type=int, default=CHI_DEFAULT_CAP)

    check = sub.add_parser("check", help="check a single graph6 string")
    check.add_argument("--g6", required=True)
    check.add_argument("--bounds", default="all")
    check.add_argument("--tol", type=float, default=SLACK_TOL)
    check.add_argument("--chi-cap", type=int, default=CHI_DEFAULT_CAP)
    _add_report_args(check)

    search = sub.add_parser("search", help="extremal hill-climb search")
    search.add_argument("--objective", required=True,
                        help="MU_NG_SUM, SQRT_SPLUS_NG_SUM, SPLUS_NG_SUM, "
                             "NEG_SPLUS_NG_SUM or VIOLATION:<bound id>")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--restarts", type=int, default=10)
    search.add_argument("--steps", type=int, default=400)
    search.add_argument("--jobs", type=int, default=1)

    sgs = sub.add_parser("subgraph-scan",
                         help="find single-deletion increases of s+")
    sgs.add_argument("--input", metavar="FILE.g6", required=True)
    sgs.add_argument("--mode", choices=("edge", "full"), default="edge")
    sgs.add_argument("--jobs", type=int, default=1)
    _add_report_args(sgs)
    return ap


def _parse_bounds(text: str):
    if text == "all":
        return None
    return [b.strip() for b in text.split(",") if b.strip()]


def _emit(report, args) -> None:
    if args.report:
        save_report(report, args.report, args.format)
    else:
        sys.stdout.buffer.write(write_report(report, args.format))
        sys.stdout.buffer.flush()


def _cmd_scan(args) -> int:
    if args.n is not None:
        stream = enumerate_labeled(args.n, cap=args.enum_cap)
        command = f"scan --n {args.n}"
    elif args.input:
        stream = stream_from_file(args.input)
        command = f"scan --input {args.input}"
    else:
        stream = stream_from_lines(sys.stdin.read().splitlines(), label="stdin")
        command = "scan --stdin"
    command += f" --bounds {args.bounds} --tol {fmt_float(args.tol)}"
    report = run_scan(stream, _parse_bounds(args.bounds), jobs=args.jobs,
                      tol=args.tol, chi_cap=args.chi_cap, command=command)
    _emit(report, args)
    return report.exit_status


def _cmd_family(args) -> int:
    params = tuple(int(x) for x in args.params.split(","))
    g = make_family(FamilySpec(args.kind, params))
    inv = collect_invariants(g, chi_cap=args.chi_cap, with_tags=True)
    print(to_graph6(g))
    payload = {
        "n": inv.n, "m": inv.m,
        "s_plus": fmt_float(inv.s_plus), "s_minus": fmt_float(inv.s_minus),
        "energy": fmt_float(inv.energy),
        "mu_max": fmt_float(inv.mu_max), "mu_min": fmt_float(inv.mu_min),
        "randic": fmt_float(inv.randic),
        "chi": inv.chi, "chi_complement": inv.chi_complement,
        "connected": inv.connected, "triangle_free": inv.triangle_free,
        "bipartite": inv.bipartite, "tags": sorted(inv.tags),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_CLEAN


def _cmd_check(args) -> int:
    g = parse_graph6(args.g6)
    rows = check_graph(g, _parse_bounds(args.bounds), chi_cap=args.chi_cap,
                       tol=args.tol)
    stream_label = f"check {args.g6}"
    report = ScanReport(
        command=f"check --g6 {args.g6} --bounds {args.bounds}",
        source=stream_label, bounds=tuple(c.bound for c in rows),
        tol=args.tol, chi_cap=args.chi_cap, seed=None, graphs=1,
        aggregates=_aggregate_rows(rows), violations=[c for c in rows if c.violated],
        rows=rows, trace_max_residual=0.0, objective_maxima={}, certify=None)
    _emit(report, args)
    return report.exit_status


def _aggregate_rows(rows):
    from .scan import BoundAggregate
    aggs = {}
    for k, chk in enumerate(rows):
        agg = aggs.setdefault(chk.bound, BoundAggregate(chk.bound))
        agg.update(chk.skipped, chk.slack, chk.equality, chk.violated, k, chk.g6)
    return aggs


def _cmd_search(args) -> int:
    objective = make_objective(args.objective)
    cfg = SearchConfig(n=args.n, seed=args.seed, restarts=args.restarts,
                       steps=args.steps)
    result = optimize(objective, cfg, jobs=args.jobs)
    payload = {
        "objective": result.objective,
        "best_g6": result.best_g6,
        "best_value": fmt_float(result.best_value),
        "seed": result.seed,
        "restarts": result.restarts_used,
        "improving_steps": len(result.trace),
        "swap_sqrt_splus_decreases": result.swap_sqrt_splus_decreases,
        "trace": [[r, s, fmt_float(v), g6] for r, s, v, g6 in result.trace],
    }
    print(json.dumps(payload, indent=2))
    return EXIT_CLEAN


def _cmd_subgraph_scan(args) -> int:
    stream = stream_from_file(args.input)
    report = subgraph_monotonicity_scan(stream, args.mode, jobs=args.jobs)
    _emit(report, args)
    return EXIT_CLEAN


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "scan": _cmd_scan,
        "family": _cmd_family,
        "check": _cmd_check,
        "search": _cmd_search,
        "subgraph-scan": _cmd_subgraph_scan,
    }
    try:
        return handlers[args.cmd](args)
    except (Graph6Error, FamilyError, UnknownBoundError, ValueError) as exc:
        print(f"ngbounds: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"ngbounds: i/o error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

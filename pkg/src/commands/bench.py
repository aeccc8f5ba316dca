"""`wcm bench` command."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from bench import compare_bounds, find_instances, run_benchmark
from commands.solve import add_solver_options, solver_settings
from config import load_config
from formats import FORMATS
from log import disable_event_log, enable_event_log
from solver import Formulation


def register(subparsers) -> None:
    p = subparsers.add_parser(
        "bench",
        help="Solve a directory of instances and write a report",
        description="Run every instance file of a directory under the chosen formulations.",
    )
    p.add_argument("directory", type=Path, help="Directory with instance files")
    p.add_argument(
        "--formulation",
        choices=["compact", "exponential", "both"],
        default="both",
        help="Formulations to run (default: both)",
    )
    p.add_argument("--format", choices=FORMATS, help="Format of every file (default: by extension)")
    p.add_argument("--pattern", help="Glob selecting files (default: *.wcm and *.stp)")
    p.add_argument("--report", type=Path, help="CSV report path (default: stdout)")
    p.add_argument("--json", type=Path, metavar="OUT", help="Also write the report as JSON")
    p.add_argument("--oracle", action="store_true", help="Cross-check small instances by enumeration")
    p.add_argument("--workers", type=int, help="Worker processes (default: config bench.workers)")
    p.add_argument("--no-times", action="store_true", help="Write 0 for times so reports are reproducible")
    p.add_argument(
        "--compare-bounds",
        action="store_true",
        help="Compare the exponential root bound with the compact LP bound",
    )
    add_solver_options(p)
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if not args.directory.is_dir():
        print(f"Error: Not a directory: {args.directory}", file=sys.stderr)
        return 2

    paths = find_instances(args.directory, args.pattern)
    if not paths:
        print(f"No instance files in {args.directory}.", file=sys.stderr)
        return 1

    if args.formulation == "both":
        formulations = [Formulation.COMPACT, Formulation.EXPONENTIAL]
    else:
        formulations = [Formulation(args.formulation)]

    config = load_config(args.config)
    cfg = solver_settings(args)
    handler = enable_event_log() if args.verbose else None
    try:
        report = run_benchmark(
            paths,
            cfg,
            formulations,
            fmt=args.format,
            oracle=args.oracle,
            oracle_max_edges=config["bench"]["oracle_max_edges"],
            workers=args.workers or config["bench"]["workers"],
            include_times=not args.no_times,
        )
    finally:
        if handler is not None:
            disable_event_log(handler)

    if args.report is None:
        sys.stdout.write(report.to_csv())
    else:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text(report.to_csv(), encoding="utf-8")
    if args.json is not None:
        args.json.write_text(report.to_json(), encoding="utf-8")

    out = sys.stderr if args.report is None else sys.stdout
    print(
        f"{len(report.rows)} run(s): {report.solved} solved, {report.root_only} at the root, "
        f"{report.failed} failed, {report.mismatches} oracle mismatch(es)",
        file=out,
    )

    if args.compare_bounds:
        comparisons = compare_bounds(report)
        if comparisons:
            share = sum(c.dominated for c in comparisons) / len(comparisons)
            print(f"Root bound at least as strong as compact LP bound on {share:.1%} of {len(comparisons)} instance(s)", file=out)
        else:
            print("⚠ No instance has bounds for both formulations", file=out)

    return 1 if report.mismatches else 0

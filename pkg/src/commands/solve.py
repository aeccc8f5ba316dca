"""`wcm solve` command."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from config import load_config
from formats import FORMATS, guess_format, read_instance
from instance import Instance
from log import disable_event_log, enable_event_log
from oracle import brute_force_wcm
from separation import CutFamily
from solver import Formulation, SolveResult, SolverConfig, solve


def add_solver_options(p: argparse.ArgumentParser) -> None:
    """Options shared by `solve` and `bench` that override ``[solver]`` settings."""
    p.add_argument("--time-limit", type=float, help="Wall-clock limit in seconds (default: config/WCM_TIME_LIMIT)")
    p.add_argument("--node-limit", type=int, help="Stop after this many nodes (0 = unlimited)")
    p.add_argument("--seed", type=int, help="Seed recorded with the run")
    p.add_argument("--dump-dir", type=Path, help="Write the LP models in LP-text format here")
    p.add_argument("--verbose", action="store_true", help="Write the solve event log (JSON lines) to stderr")


def solver_settings(args: argparse.Namespace, formulation: str | None = None) -> SolverConfig:
    """Merge config file, environment and command-line overrides."""
    config = load_config(args.config)
    dump_dir = str(args.dump_dir) if getattr(args, "dump_dir", None) else None
    return SolverConfig.from_config(
        config,
        formulation=formulation,
        time_limit=args.time_limit,
        node_limit=args.node_limit,
        seed=args.seed,
        dump_dir=dump_dir,
    )


def register(subparsers) -> None:
    p = subparsers.add_parser(
        "solve",
        help="Solve one instance",
        description="Find a maximum-weight connected matching of one instance file.",
    )
    p.add_argument("file", type=Path, help="Instance file")
    p.add_argument("--format", choices=FORMATS, help="Input format (default: by extension)")
    p.add_argument("--formulation", choices=[f.value for f in Formulation], help="Model to solve")
    add_solver_options(p)
    p.add_argument("--oracle", action="store_true", help="Cross-check the optimum by enumeration")
    p.add_argument("--json", type=Path, metavar="OUT", help="Write the result as JSON to OUT ('-' for stdout)")
    p.set_defaults(func=run)


def _edge_text(inst: Instance, e: int) -> str:
    u, v = inst.graph.edges[e]
    return f"{inst.label(u)}-{inst.label(v)}"


def print_result(inst: Instance, result: SolveResult) -> None:
    marker = "✓" if result.status.solved else "⚠"
    print(f"{marker} {result.status.value}  {inst.name or '(unnamed)'} (n={inst.n}, m={inst.m}, {result.formulation})")
    print(f"  LB = {result.lb:g}  UB = {result.ub:g}  gap = {result.gap:.2%}")
    print(f"  nodes = {result.nodes}  root-only = {'yes' if result.root_only else 'no'}")
    cuts = "  ".join(f"{family.value}={result.cuts[family]}" for family in CutFamily)
    print(f"  cuts: {cuts}  lazy={result.lazy}")
    print(f"  time = {result.time:.3f}s (LP {result.lp_time:.3f}s, {result.lp_iterations} iterations)")
    edges = ", ".join(_edge_text(inst, e) for e in sorted(result.matching))
    print(f"  matching: {edges or '(empty)'}")


def run(args: argparse.Namespace) -> int:
    fmt = args.format or guess_format(args.file)
    inst = read_instance(args.file, fmt)
    cfg = solver_settings(args, args.formulation)

    handler = enable_event_log() if args.verbose else None
    try:
        result = solve(inst, cfg)
    finally:
        if handler is not None:
            disable_event_log(handler)

    payload = result.to_dict()
    payload["instance"] = inst.name
    payload["seed"] = cfg.seed

    exit_code = 0
    if args.oracle:
        config = load_config(args.config)
        limit = config["bench"]["oracle_max_edges"]
        if inst.m > limit:
            print(f"⚠ Oracle skipped: {inst.m} edges exceed the limit of {limit}", file=sys.stderr)
        else:
            value, _ = brute_force_wcm(inst, max_edges=limit)
            payload["oracle"] = value
            if abs(value - result.lb) > 1e-6 and result.status.solved:
                print(f"✗ Oracle mismatch: solver {result.lb:g}, oracle {value:g}", file=sys.stderr)
                exit_code = 1

    if args.json is not None:
        text = json.dumps(payload, indent=2)
        if str(args.json) == "-":
            print(text)
            return exit_code
        args.json.write_text(text + "\n", encoding="utf-8")

    print_result(inst, result)
    if args.oracle and "oracle" in payload and exit_code == 0:
        print(f"  oracle = {payload['oracle']:g} ✓")
    return exit_code

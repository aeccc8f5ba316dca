"""`wcm gen` command."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from formats import generate_gnp, parse_distribution, write_canonical


def register(subparsers) -> None:
    p = subparsers.add_parser(
        "gen",
        help="Generate a random G(n, p) instance",
        description="Generate a G(n, p) graph with random edge weights in the canonical format.",
    )
    p.add_argument("--n", type=int, required=True, help="Number of vertices")
    p.add_argument("--p", type=float, required=True, help="Edge probability")
    p.add_argument(
        "--dist",
        default="uniform:-1,1",
        help="Weight distribution: uniform:a,b or gaussian:mu,sigma (default: uniform:-1,1)",
    )
    p.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    p.add_argument("--out", type=Path, help="Output file (default: stdout)")
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if args.n < 1:
        print("Error: --n must be at least 1", file=sys.stderr)
        return 2
    if not 0.0 <= args.p <= 1.0:
        print("Error: --p must be in [0, 1]", file=sys.stderr)
        return 2

    inst = generate_gnp(args.n, args.p, parse_distribution(args.dist), args.seed)
    data = write_canonical(inst)

    if args.out is None:
        sys.stdout.write(data.decode("utf-8"))
        return 0

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_bytes(data)
    print(f"✓ Wrote {args.out} ({inst.name}: n={inst.n}, m={inst.m})")
    return 0

"""Command line entry point: ``extvanish report | james | oracle``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .james import NotTwoPart, hook_graph, james_array, james_irreducible
from .modular import InvalidParameters, make_params
from .partitions import format_partition, parse_partition
from .report import generate_report

EXIT_OK = 0
EXIT_REDUCIBLE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_DISAGREEMENT = 3
EXIT_USAGE = 64


def _rows(matrix) -> list[str]:
    return [" ".join(str(x) for x in row) for row in matrix]


def cmd_report(args: argparse.Namespace) -> int:
    report = generate_report(args.n, args.q, args.r, workers=args.workers)
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_james(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    params = make_params(lam.n, args.q, args.r)
    print(f"partition: {format_partition(lam)}  (n={lam.n}, q={params.q}, r={params.r}, l={params.l})")
    print("hook graph:")
    for line in _rows(hook_graph(lam).hooks):
        print("  " + line)
    print(f"James array [{format_partition(lam)}]_{{{params.r},{params.l}}}:")
    for line in _rows(james_array(lam, params.r, params.l).rendered()):
        print("  " + line)
    try:
        ok = james_irreducible(lam, params.r, params.l)
    except NotTwoPart as exc:
        print(f"verdict: not applicable ({exc})")
        return EXIT_NOT_APPLICABLE
    print("verdict: " + ("irreducible" if ok else "reducible"))
    return EXIT_OK if ok else EXIT_REDUCIBLE


def cmd_oracle(args: argparse.Namespace) -> int:
    from .oracle.meataxe import meataxe_irreducible
    from .oracle.specht import specht_module

    lam = parse_partition(args.partition)
    params = make_params(lam.n, args.q, args.r)
    rep = specht_module(lam, params, max_n=args.max_n)
    ok = meataxe_irreducible(rep, seed=args.seed)
    print(f"partition: {format_partition(lam)}  (n={lam.n}, q={params.q}, r={params.r}, l={params.l})")
    print(f"dim: {rep.dim}")
    print("meataxe: " + ("irreducible" if ok else "reducible"))
    if len(lam) == 2:
        james = james_irreducible(lam, params.r, params.l)
        print("james: " + ("irreducible" if james else "reducible"))
        if james != ok:
            print("DISAGREEMENT between Meataxe and James criterion", file=sys.stderr)
            return EXIT_DISAGREEMENT
        print("agreement: yes")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extvanish", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="Ext-vanishing report for GL_n(q) in characteristic r")
    rep.add_argument("--n", type=int, required=True)
    rep.add_argument("--q", type=int, required=True)
    rep.add_argument("--r", type=int, required=True)
    rep.add_argument("--format", choices=("json", "text"), default="json")
    rep.add_argument("--out")
    rep.add_argument("--workers", type=int, default=1)
    rep.set_defaults(func=cmd_report)

    jam = sub.add_parser("james", help="hook graph, James array and two-part verdict")
    jam.add_argument("--partition", required=True)
    jam.add_argument("--q", type=int, required=True)
    jam.add_argument("--r", type=int, required=True)
    jam.set_defaults(func=cmd_james)

    ora = sub.add_parser("oracle", help="Hecke Specht module + Meataxe cross-check")
    ora.add_argument("--partition", required=True)
    ora.add_argument("--q", type=int, required=True)
    ora.add_argument("--r", type=int, required=True)
    ora.add_argument("--seed", type=int, default=0)
    ora.add_argument("--max-n", type=int, default=7)
    ora.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

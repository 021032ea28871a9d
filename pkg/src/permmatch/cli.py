"""Command-line entry point.

Exit status contract: 0 = all counts agree, 1 = counting mismatch found,
2 = usage or parse error.  Reports go to stdout as JSON with fixed key
order; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bipartite, gamma, harness
from .perms import Transposition, parse_cycles


def _read_graph(path: str) -> bipartite.BipartiteGraph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror}") from exc
    try:
        return bipartite.parse_graph(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _cmd_verify(args) -> int:
    g = _read_graph(args.file)
    report = harness.verify(g)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.agreement else 1


def _cmd_sweep(args) -> int:
    mode = "exhaustive" if args.exhaustive else "random"
    report = harness.sweep(args.n, mode, trials=args.trials, seed=args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.agreement else 1


def _cmd_gamma(args) -> int:
    if args.dot:
        print(gamma.export_dot(gamma.build_gamma(args.n)), end="")
    else:
        print(json.dumps(harness.gamma_stats(args.n).to_dict(), indent=2))
    return 0


def _cmd_factorize(args) -> int:
    p = parse_cycles(args.cycles, args.n)
    from .perms import sift

    factors = sift(p)
    path = gamma.perm_to_path(p)
    print("*".join(str(psi) for psi in reversed(factors)))
    print(str(path))
    return 0


def _cmd_gen(args) -> int:
    g = bipartite.random_graph(args.n, args.density, args.seed)
    print(bipartite.serialize_graph(g), end="")
    return 0


def _cmd_count(args) -> int:
    g = _read_graph(args.file)
    if args.method == "cvmp":
        print(harness.count_via_cvmp(g))
    elif args.method == "ryser":
        print(bipartite.count_ryser(g))
    else:
        print(bipartite.count_bruteforce(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permmatch",
        description="Perfect-matching counting workbench with cross-checking oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="count a graph file by every method and compare")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="cross-check the counters over many instances")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("gamma", help="export or summarize the generating graph")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--stats", action="store_true")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("factorize", help="canonic factorization and path of a permutation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("cycles")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("gen", help="emit a seeded random graph file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("count", help="count perfect matchings by one method")
    p.add_argument("--method", choices=("cvmp", "ryser", "brute"), required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and not args.exhaustive:
        if args.seed is None:
            parser.error("random sweeps need --seed")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    entry()

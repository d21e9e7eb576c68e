"""Command-line interface.

Exit codes: 0 success, 1 a comparison failed, 2 bad usage or
parameters, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from .core import GroundParams, build_graph
from .export import RENDERERS
from .report import (
    DEFAULT_ORACLE_LIMIT,
    STATUS_OK,
    compute_invariants,
    run_reference_table,
    verify_grid,
)


def _short(value) -> str:
    text = str(value)
    if len(text) > 72:
        return text[:69] + "..."
    return text


def cmd_gen(args) -> int:
    params = GroundParams(args.n, args.k)
    graph = build_graph(params)
    text = RENDERERS[args.format](graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_invariants(args) -> int:
    params = GroundParams(args.n, args.k)
    report = compute_invariants(params, oracle_limit=args.oracle_limit)
    if args.json:
        sys.stdout.write(report.to_json(include_timings=True))
    else:
        print(f"H_B({report.n},{report.k}): {report.overall}")
        for e in report.entries:
            line = (
                f"  {e.name}: formula={_short(e.formula)} "
                f"oracle={_short(e.oracle)} [{e.status}]"
            )
            if e.note:
                line += f"  # {e.note}"
            print(line)
    return 0 if report.overall == "pass" else 1


def cmd_verify(args) -> int:
    grid = verify_grid(args.n_min, args.n_max, oracle_limit=args.oracle_limit)
    if args.json:
        sys.stdout.write(grid.to_json())
    else:
        for point in grid.points:
            print(f"H_B({point.n},{point.k}): {point.overall}")
            for e in point.mismatches():
                print(
                    f"  MISMATCH {e.name}: formula={_short(e.formula)} "
                    f"oracle={_short(e.oracle)}"
                )
        print(f"overall: {grid.overall}")
    return 0 if grid.overall == "pass" else 1


def cmd_table1(args) -> int:
    rows = run_reference_table()
    ok = True
    for row in rows:
        cells = " ".join(f"d{h}={row.reference[h]}" for h in sorted(row.reference))
        print(f"H_B({row.n},{row.k}) {cells} [{row.status}]")
        if row.status != STATUS_OK:
            ok = False
            print(f"  formula={row.formula}")
            print(f"  oracle={row.oracle}")
    print(f"overall: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbnk",
        description=(
            "Bipartite Kneser B type-k graphs: generation, closed-form "
            "invariants, and cross-validation"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="materialize a graph and write it out")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument(
        "--format", choices=sorted(RENDERERS), default="edgelist"
    )
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    inv = sub.add_parser(
        "invariants", help="evaluate all invariants for one (n, k)"
    )
    inv.add_argument("--n", type=int, required=True)
    inv.add_argument("--k", type=int, required=True)
    inv.add_argument("--json", action="store_true")
    inv.add_argument(
        "--oracle-limit",
        type=int,
        default=DEFAULT_ORACLE_LIMIT,
        help="skip graph-based oracles above this many vertices",
    )
    inv.set_defaults(func=cmd_invariants)

    ver = sub.add_parser(
        "verify", help="compare formulas and oracles over a grid of (n, k)"
    )
    ver.add_argument("n_min", type=int)
    ver.add_argument("n_max", type=int)
    ver.add_argument("--json", action="store_true")
    ver.add_argument(
        "--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT
    )
    ver.set_defaults(func=cmd_verify)

    tab = sub.add_parser(
        "table1", help="recompute the published distance table"
    )
    tab.set_defaults(func=cmd_table1)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

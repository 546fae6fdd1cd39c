"""Command line interface: run sweeps, list presets, verify invariants.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from .eigensolver import NumericalError
from .scenario import (
    ConfigError,
    list_presets,
    load_preset,
    load_scenario,
    run_scenario,
    write_results,
)
from .verify import run_checks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinring",
        description="Exact diagonalization and entanglement of noncollinear Ising spin rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a sweep scenario")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="path to a scenario config file")
    src.add_argument("--preset", help="name of a packaged preset scenario")
    run.add_argument("--out", required=True, help="output file path")
    run.add_argument("--format", choices=("csv", "json"), default="csv")

    sub.add_parser("list-presets", help="list packaged preset scenarios")
    sub.add_parser("verify", help="run the invariant suite")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-presets":
            for name in list_presets():
                print(name)
            return 0
        if args.command == "verify":
            return 0 if run_checks() else 3
        scenario = load_preset(args.preset) if args.preset else load_scenario(args.config)
        table = run_scenario(scenario)
        write_results(table, args.out, args.format)
        print(f"{len(table.rows)} rows -> {args.out}")
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

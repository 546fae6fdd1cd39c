"""spinring-plot CLI: render one preset CSV into one vector image."""

from __future__ import annotations

import argparse
import sys

from .render import REQUIRED_COLUMNS, EmptyDataError, FigureSpec, SchemaError, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="spinring-plot",
        description="Render a spinring preset CSV into a vector figure",
    )
    parser.add_argument("--preset", required=True, choices=sorted(REQUIRED_COLUMNS))
    parser.add_argument("--in", dest="csv_path", required=True, help="input CSV path")
    parser.add_argument("--out", dest="out_path", required=True, help="output image path (.svg/.pdf)")
    args = parser.parse_args(argv)
    try:
        render(FigureSpec(args.preset, args.csv_path, args.out_path))
    except (SchemaError, EmptyDataError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

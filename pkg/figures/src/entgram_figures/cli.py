"""Command-line figure renderer.

Exit codes: 0 success, 2 invalid input (unknown kind/format, header or row
problems), 4 I/O failure (unreadable CSV, unwritable image path).
"""

from __future__ import annotations

import argparse
import sys

from .csvdata import BadRow, HeaderMismatch
from .render import FORMATS, KINDS, BadSpec, FigureSpec, render

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render entropy figures from scan CSV files.",
    )
    parser.add_argument("--in", dest="in_path", required=True, help="input CSV")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help="image format (default: from the --out suffix, else png)",
    )
    parser.add_argument(
        "--log-base",
        choices=("e", "2"),
        default="e",
        help="entropy base the CSV was produced with (default e)",
    )
    parser.add_argument("--title", default=None, help="figure title override")
    return parser


def _infer_format(out_path: str, explicit: str | None) -> str:
    if explicit is not None:
        return explicit
    suffix = out_path.rsplit(".", 1)[-1].lower() if "." in out_path else ""
    return suffix if suffix in FORMATS else "png"


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        spec = FigureSpec(
            in_path=args.in_path,
            kind=args.kind,
            out_path=args.out,
            format=_infer_format(args.out, args.format),
            log_base=args.log_base,
            title=args.title,
        )
        result = render(spec)
    except (HeaderMismatch, BadRow, BadSpec) as exc:
        print(f"render: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"render: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO

    where = " ".join(f"{k}={v:.6g}" for k, v in result.max_params.items())
    print(f"annotated max {result.max_entropy:.6g} at {where}")
    print(
        f"points={result.points_total} masked_infeasible={result.points_masked}"
    )
    print(f"wrote {result.out_path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

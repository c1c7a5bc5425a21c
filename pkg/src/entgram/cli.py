"""Command-line front end.

Subcommands
-----------

``analyze``
    Read a state file (JSON) and print its entanglement report.
``scan2d``
    Sweep the two-dimensional ``(p, sigma)`` family and write CSV/JSON.
``scan4d``
    Sweep one of the four-dimensional families A-F and write CSV/JSON.
``verify``
    Sample random Gram matrices, run the constrained maximizer, and report
    the deviation/entropy trade-off; exits 5 if any violation is found.
``sample``
    Write random normalized state files for pipeline tests.

Exit codes: 0 success (and, for ``verify``, no violations), 2 invalid
input, 3 degenerate (zero-norm) state, 4 I/O failure, 5 violation found.
All randomness flows from ``--seed`` (default 42); identical flags give
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import explore
from .entangle import analyze, report_to_json
from .errors import EntgramError, InvalidInput, ZeroState
from .explore import GridAxis, ScanGrid
from .serialize import dumps_json, format_float
from .state import load_state, save_state

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4
EXIT_VIOLATION = 5

DEFAULT_SEED = 42

# Default "lo:hi:count" ranges per swept axis.
_D2_P_RANGE = (0.0, 1.0, 101)
_D2_SIGMA_RANGE = (0.0, 0.5, 51)
_D4_SIGMA_RANGE = (-0.25, 0.25, 21)


def _parse_grid(spec: str, name: str, default_lo: float, default_hi: float) -> GridAxis:
    """Turn ``"lo:hi:count"`` (or a bare ``count``) into a grid axis."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return GridAxis(name, default_lo, default_hi, int(parts[0]))
        if len(parts) == 3:
            return GridAxis(name, float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise InvalidInput(name, f"bad grid spec {spec!r}: {exc}") from exc
    raise InvalidInput(name, f"bad grid spec {spec!r}: want 'lo:hi:count' or 'count'")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _print_scan_summary(result: explore.ScanResult, out_path: str) -> None:
    n_feasible = sum(1 for rec in result.records if rec.feasible)
    best = result.feasible_max()
    if best is None:
        where = "none"
        peak = "n/a"
    else:
        where = " ".join(f"{k}={format_float(v)}" for k, v in best.params.items())
        peak = format_float(best.entropy)
    print(f"points={len(result.records)} feasible={n_feasible}")
    print(f"max_entropy={peak} at {where}")
    print(f"wrote {out_path}")


def _emit_scan(result: explore.ScanResult, fmt: str, out_path: str) -> None:
    if fmt == "csv":
        _write_text(out_path, explore.scan_to_csv(result))
    else:
        _write_text(out_path, dumps_json(explore.scan_to_json(result)) + "\n")
    _print_scan_summary(result, out_path)


def _cmd_analyze(args: argparse.Namespace) -> int:
    state = load_state(args.state)
    report = analyze(state, base=args.log_base)
    text = dumps_json(report_to_json(report))
    print(text)
    if args.out is not None:
        _write_text(args.out, text + "\n")
    return EXIT_OK


def _cmd_scan2d(args: argparse.Namespace) -> int:
    axis_p = _parse_grid(args.grid_p, "p", *_D2_P_RANGE[:2])
    axis_sigma = _parse_grid(args.grid_sigma, "sigma", *_D2_SIGMA_RANGE[:2])
    grid = ScanGrid(axes=(axis_p, axis_sigma))
    result = explore.scan_d2(grid, base=args.log_base)
    _emit_scan(result, args.format, args.out)
    return EXIT_OK


def _cmd_scan4d(args: argparse.Namespace) -> int:
    family = args.family
    swept = explore.FAMILY_SWEPT[family]
    specs = {
        "sigma1": args.grid_sigma1,
        "sigma2": args.grid_sigma2,
        "sigma3": args.grid_sigma3,
    }
    for name, spec in specs.items():
        if spec is not None and name not in swept:
            raise InvalidInput(
                name, f"family {family} does not sweep {name}; swept axes: {swept}"
            )
    if args.sigma2_fixed is not None and family != "F":
        raise InvalidInput(
            "sigma2_fixed", f"only family F holds sigma2 fixed, got family {family}"
        )
    axes = tuple(
        _parse_grid(specs[name] or str(_D4_SIGMA_RANGE[2]), name, *_D4_SIGMA_RANGE[:2])
        for name in swept
    )
    fixed = {}
    if family == "F":
        fixed["sigma2"] = (
            explore.DEFAULT_SIGMA2_FIXED
            if args.sigma2_fixed is None
            else args.sigma2_fixed
        )
    grid = ScanGrid(axes=axes, fixed=fixed)
    result = explore.scan_d4(grid, family, base=args.log_base)
    _emit_scan(result, args.format, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = explore.verify_conjecture(
        args.d,
        samples=args.samples,
        epsilon=args.epsilon,
        seed=args.seed,
        optimizer_restarts=args.restarts,
    )
    text = dumps_json(explore.verify_report_to_json(report))
    print(text)
    if args.out is not None:
        _write_text(args.out, text + "\n")
    return EXIT_OK if report.violations == 0 else EXIT_VIOLATION


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise InvalidInput("count", f"need at least one state, got {args.count}")
    children = np.random.SeedSequence(args.seed).spawn(args.count)
    for i, child in enumerate(children):
        state = explore.random_state(args.d, args.trunc_dim, child)
        path = f"{args.out}-{i:03d}.json"
        save_state(state, path)
        print(f"wrote {path}")
    return EXIT_OK


def _add_common_output(sub: argparse.ArgumentParser, required: bool) -> None:
    sub.add_argument(
        "--out",
        required=required,
        default=None,
        help="output path" + ("" if required else " (default: stdout only)"),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entgram",
        description="Entanglement entropy and Gram-matrix exploration tools.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s 0.1.0"
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_analyze = subs.add_parser(
        "analyze", help="entanglement report for one state file"
    )
    p_analyze.add_argument("--state", required=True, help="state JSON file")
    p_analyze.add_argument(
        "--log-base", choices=("e", "2"), default="e", help="entropy log base"
    )
    _add_common_output(p_analyze, required=False)
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_scan2 = subs.add_parser(
        "scan2d", help="sweep the two-dimensional (p, sigma) family"
    )
    p_scan2.add_argument(
        "--grid-p",
        default="{}:{}:{}".format(*_D2_P_RANGE),
        help="p axis as 'lo:hi:count' or bare count (default %(default)s)",
    )
    p_scan2.add_argument(
        "--grid-sigma",
        default="{}:{}:{}".format(*_D2_SIGMA_RANGE),
        help="sigma axis as 'lo:hi:count' or bare count (default %(default)s)",
    )
    p_scan2.add_argument("--log-base", choices=("e", "2"), default="e")
    p_scan2.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common_output(p_scan2, required=True)
    p_scan2.set_defaults(handler=_cmd_scan2d)

    p_scan4 = subs.add_parser(
        "scan4d",
        help="sweep a four-dimensional family (A-D sweep sigma1..3; "
        "E sweeps sigma1; F sweeps sigma1, sigma3 with sigma2 held)",
    )
    p_scan4.add_argument(
        "--family", required=True, choices=sorted(explore.FAMILIES)
    )
    p_scan4.add_argument(
        "--grid-sigma1",
        default=None,
        help="sigma1 axis as 'lo:hi:count' or bare count "
        "(default {}:{}:{})".format(*_D4_SIGMA_RANGE),
    )
    p_scan4.add_argument("--grid-sigma2", default=None, help="sigma2 axis (families A-D)")
    p_scan4.add_argument("--grid-sigma3", default=None, help="sigma3 axis (not family E)")
    p_scan4.add_argument(
        "--sigma2-fixed",
        type=float,
        default=None,
        help="held sigma2 value for family F (default 0.1)",
    )
    p_scan4.add_argument("--log-base", choices=("e", "2"), default="e")
    p_scan4.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common_output(p_scan4, required=True)
    p_scan4.set_defaults(handler=_cmd_scan4d)

    p_verify = subs.add_parser(
        "verify", help="sample + optimize the deviation/entropy trade-off"
    )
    p_verify.add_argument("--d", type=int, default=2, help="dimension (default 2)")
    p_verify.add_argument(
        "--samples", type=int, default=10_000, help="random draws (default 10000)"
    )
    p_verify.add_argument(
        "--epsilon", type=float, default=0.05, help="deviation floor (default 0.05)"
    )
    p_verify.add_argument(
        "--restarts", type=int, default=4, help="optimizer restarts (default 4)"
    )
    p_verify.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="RNG seed (default 42)"
    )
    _add_common_output(p_verify, required=False)
    p_verify.set_defaults(handler=_cmd_verify)

    p_sample = subs.add_parser("sample", help="write random normalized state files")
    p_sample.add_argument("--d", type=int, default=2, help="dimension (default 2)")
    p_sample.add_argument(
        "--trunc-dim", type=int, default=8, help="truncation dimension (default 8)"
    )
    p_sample.add_argument(
        "--count", type=int, default=1, help="number of files (default 1)"
    )
    p_sample.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="RNG seed (default 42)"
    )
    p_sample.add_argument(
        "--out", required=True, help="output prefix; files are <out>-NNN.json"
    )
    p_sample.set_defaults(handler=_cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ZeroState as exc:
        print(f"entgram: degenerate state: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InvalidInput as exc:
        print(f"entgram: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EntgramError as exc:
        print(f"entgram: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"entgram: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

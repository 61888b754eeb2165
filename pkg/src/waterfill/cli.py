"""Command-line front end.

Exit codes: 0 success (or KKT pass), 1 I/O error, 2 validation error,
3 KKT verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from waterfill.chart import MIN_HEIGHT, MIN_WIDTH, render_chart
from waterfill.core import budget_sweep, solve_exact, verify_kkt
from waterfill.errors import WaterfillError
from waterfill.io import emit_report, emit_sweep, load_profile

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_KKT_FAILED = 3

PROG = "waterfill"


class _Invalid(Exception):
    """Validation failure detected inside the CLI layer."""


def _budget(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    if not math.isfinite(value) or value < 0:
        raise argparse.ArgumentTypeError(f"must be a non-negative finite decimal: {text!r}")
    return value


def _positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"must be a positive finite decimal: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Split a budget across activities with logarithmic returns by water-filling.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("solve", help="optimal allocation for one budget")
    p.add_argument("--input", required=True, type=Path, help="profile file (.csv or .json)")
    p.add_argument("--budget", required=True, type=_budget)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("sweep", help="solutions across a range of budgets")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--budget-min", required=True, type=_budget)
    p.add_argument("--budget-max", required=True, type=_budget)
    p.add_argument("--steps", type=int, default=50)

    p = sub.add_parser("verify", help="check KKT conditions of a given allocation")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--budget", required=True, type=_budget)
    p.add_argument("--allocation", required=True, type=Path, help="JSON array of times")
    p.add_argument("--tolerance", type=_positive, default=1e-9)

    p = sub.add_parser("chart", help="ASCII picture of the filled container")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--budget", required=True, type=_budget)
    p.add_argument("--width", type=int, default=72)
    p.add_argument("--height", type=int, default=20)
    return parser


def _read_allocation(path: Path) -> list[float]:
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Invalid(f"{path}: invalid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(data, list):
        raise _Invalid(f"{path}: expected a JSON array of times")
    for i, x in enumerate(data, start=1):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise _Invalid(f"{path}: entry {i} is not a number: {x!r}")
    return [float(x) for x in data]


def run_solve(args: argparse.Namespace) -> int:
    profile = load_profile(args.input).to_profile()
    solution = solve_exact(profile, args.budget)
    sys.stdout.write(emit_report(solution, profile, args.format))
    return EXIT_OK


def run_sweep(args: argparse.Namespace) -> int:
    if not args.budget_max > args.budget_min:
        raise _Invalid(f"--budget-max ({args.budget_max}) must exceed --budget-min ({args.budget_min})")
    if args.steps < 2:
        raise _Invalid(f"--steps must be >= 2, got {args.steps}")
    profile = load_profile(args.input).to_profile()
    curve = budget_sweep(profile, args.budget_min, args.budget_max, args.steps)
    sys.stdout.write(emit_sweep(curve, profile))
    return EXIT_OK


def run_verify(args: argparse.Namespace) -> int:
    profile = load_profile(args.input).to_profile()
    times = _read_allocation(args.allocation)
    if len(times) != len(profile):
        raise _Invalid(
            f"{args.allocation}: {len(times)} times for {len(profile)} activities"
        )
    report = verify_kkt(profile, args.budget, times, args.tolerance)
    sys.stdout.write(report.format())
    return EXIT_OK if report.passed else EXIT_KKT_FAILED


def run_chart(args: argparse.Namespace) -> int:
    if args.width < MIN_WIDTH or args.height < MIN_HEIGHT:
        raise _Invalid(
            f"chart needs --width >= {MIN_WIDTH} and --height >= {MIN_HEIGHT}, "
            f"got {args.width}x{args.height}"
        )
    profile = load_profile(args.input).to_profile()
    solution = solve_exact(profile, args.budget)
    sys.stdout.write(render_chart(profile, solution, args.width, args.height))
    return EXIT_OK


_COMMANDS = {"solve": run_solve, "sweep": run_sweep, "verify": run_verify, "chart": run_chart}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (WaterfillError, _Invalid) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

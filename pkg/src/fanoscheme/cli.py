"""Command-line front end.

    fano --n 4 --degrees 4 --k 1 [--json] [--check-oracle] [--time]

Exit status is 0 on success, 2 for invalid input (including a negative
expected dimension) and 3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from .invariants import (
    ConsistencyError,
    FanoProblem,
    InvalidProblemError,
    InvariantsReport,
    compute_report,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _degree_list(text: str) -> tuple[int, ...]:
    items = [s.strip() for s in text.split(",")]
    if not text.strip() or any(not s for s in items):
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    return tuple(_nonnegative_int(s) for s in items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano",
        description="Degree and genus of the Fano scheme of k-planes on a "
        "general complete intersection in P^n.",
    )
    parser.add_argument("--n", type=_nonnegative_int, required=True, help="ambient dimension of P^n")
    parser.add_argument(
        "--degrees", type=_degree_list, required=True, help="multidegree, e.g. 2,2,2"
    )
    parser.add_argument("--k", type=_nonnegative_int, required=True, help="dimension of the linear subspaces")
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    parser.add_argument(
        "--check-oracle",
        action="store_true",
        help="cross-check the degree against the Vandermonde-staircase formula",
    )
    parser.add_argument("--time", action="store_true", help="include wall time in the output")
    return parser


def format_text(report: InvariantsReport, include_time: bool = False) -> str:
    p = report.problem
    lines = [
        f"n: {p.n}",
        f"degrees: {','.join(map(str, p.degrees))}",
        f"k: {p.k}",
        f"delta: {report.delta}",
        f"hypothesis_ok: {'yes' if report.hypothesis_ok else 'no'} ({report.hypothesis_reason})",
        f"degree: {report.degree}",
        f"genus: {'-' if report.genus is None else report.genus}",
        f"canonical_coefficient: {report.canonical_coefficient}",
        f"oracle_checked: {'yes' if report.oracle_checked else 'no'}",
    ]
    if include_time:
        lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
    return "\n".join(lines) + "\n"


def format_json(report: InvariantsReport, include_time: bool = False) -> str:
    return json.dumps(report.to_dict(include_time=include_time)) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        # argparse prints help and usage errors through the sys streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        problem = FanoProblem(args.n, args.degrees, args.k)
        report = compute_report(problem, check_oracle=args.check_oracle)
    except InvalidProblemError as exc:
        print(f"fano: error: {exc}", file=stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"fano: internal consistency failure: {exc}", file=stderr)
        return EXIT_INCONSISTENT

    if args.json:
        stdout.write(format_json(report, include_time=args.time))
    else:
        stdout.write(format_text(report, include_time=args.time))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

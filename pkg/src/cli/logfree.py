#!/usr/bin/env python3
"""
Certify freeness of logarithmic tangent sheaves from the command line.

Reads a problem file (``logfree-problem/1``), runs one check, and writes the
certificate as canonical JSON to --emit or stdout. Status lines go to stderr.

Exit codes: 0 Free or verified, 1 NotCertified, 2 invalid input or a failed
precondition.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from certificates import ReportGenerator, canonical_json
from certificates.verify import verify_certificate
from errors import LogfreeError

from .commands import (
    COMMANDS,
    EXIT_ERROR,
    EXIT_NOT_CERTIFIED,
    EXIT_OK,
    Outcome,
    error_outcome,
    run_command,
)
from .fixtures import run_fixtures
from .problem import load_problem


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logfree",
        description="Certify freeness of logarithmic tangent sheaves with exact arithmetic",
        epilog="Example: logfree check-divisor --input quartic.json --emit quartic.cert.json",
    )
    parser.add_argument("command", choices=COMMANDS, help="Check to run")
    parser.add_argument(
        "--input", "-i",
        metavar="FILE",
        help="Problem file (a certificate file for verify)",
    )
    parser.add_argument(
        "--emit", "-o",
        metavar="PATH",
        help="Write the JSON result here instead of stdout (a directory for fixtures)",
    )
    parser.add_argument(
        "--order",
        choices=["grevlex", "lex", "gradedlex"],
        help="Monomial order (default: grevlex)",
    )
    parser.add_argument(
        "--syzygy-degree-bound",
        type=int,
        metavar="N",
        help="Largest syzygy degree searched (default: 1 + sum of degrees)",
    )
    parser.add_argument(
        "--assume-independent",
        action="store_true",
        help="Skip the algebraic independence check",
    )
    parser.add_argument(
        "--method",
        choices=["bareiss", "cofactor"],
        help="Determinant algorithm (default: bareiss)",
    )
    parser.add_argument(
        "--report",
        metavar="FILE",
        help="Also render an HTML report",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Log computation details to stderr",
    )
    parser.add_argument(
        "--quiet", "-q",
        action="store_true",
        help="Suppress status lines",
    )
    return parser


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "order": args.order,
        "method": args.method,
        "degree_bound": args.syzygy_degree_bound,
        "assume_independent": args.assume_independent or None,
    }


def _status(ok: bool, message: str, quiet: bool) -> None:
    if not quiet:
        print(f"{'✓' if ok else '✗'} {message}", file=sys.stderr)


def _emit(payload: dict[str, Any], emit: Optional[str]) -> None:
    text = canonical_json(payload)
    if emit is None:
        sys.stdout.write(text)
        return
    path = Path(emit)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _run_fixtures(args: argparse.Namespace) -> int:
    results = run_fixtures(args.emit, overrides=_overrides(args))
    for result in results:
        _status(result.passed, result.name, args.quiet)
        for failure in result.failures:
            _status(False, f"  {failure}", args.quiet)
    if args.report:
        report = ReportGenerator("logfree fixtures")
        for result in results:
            if result.outcome.certificate is not None:
                report.add(result.name, result.outcome.certificate)
        report.generate()
        report.dump(args.report)
    failed = [result.name for result in results if not result.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} fixtures passed"
    _status(not failed, summary, args.quiet)
    if args.emit is None:
        sys.stdout.write(canonical_json({r.name: r.passed for r in results}))
    return EXIT_OK if not failed else EXIT_NOT_CERTIFIED


def _run_verify(args: argparse.Namespace) -> Outcome:
    try:
        payload = json.loads(Path(args.input).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        return error_outcome(LogfreeError(f"not valid JSON: {e.msg}", location=e.pos))
    result = verify_certificate(payload)
    status = "certificate verified" if result.ok else f"{len(result.problems)} problems found"
    return Outcome(result.to_json(), EXIT_OK if result.ok else EXIT_NOT_CERTIFIED, status)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the logfree command-line tool."""
    args = build_parser().parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    if args.command == "fixtures":
        return _run_fixtures(args)
    if args.input is None:
        _status(False, f"{args.command} needs --input", args.quiet)
        return EXIT_ERROR

    try:
        if args.command == "verify":
            outcome = _run_verify(args)
        else:
            outcome = run_command(args.command, load_problem(args.input), _overrides(args))
    except LogfreeError as e:
        outcome = error_outcome(e)
    except OSError as e:
        _status(False, f"Error: {e}", args.quiet)
        return EXIT_ERROR

    _emit(outcome.payload, args.emit)
    _status(outcome.exit_code == EXIT_OK, outcome.status, args.quiet)
    if args.report and outcome.certificate is not None:
        report = ReportGenerator()
        report.add(args.command, outcome.certificate)
        report.generate()
        report.dump(args.report)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())

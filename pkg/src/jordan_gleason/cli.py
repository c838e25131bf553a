"""Command-line runner for the verification suites."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ParseError, UnknownSuite
from .suites import SUITES, run_suite


def _parser():
    ap = argparse.ArgumentParser(
        prog="jordan-gleason",
        description="Run seeded verification suites over finite-dimensional JB*-algebras.",
    )
    ap.add_argument("suite", nargs="?", help="suite name (see --list-suites)")
    ap.add_argument("--algebra", default="m3", help='descriptor such as "m3+s4+spin5+albert" (default m3)')
    ap.add_argument("--trials", type=int, default=None, help="random instances (suite default if omitted)")
    ap.add_argument("--seed", type=int, default=None, help="integer seed (default: $JG_DEFAULT_SEED or 0)")
    ap.add_argument("--tol", type=float, default=None,
                    help="override every upper-bound tolerance; slack below lower-bound targets")
    ap.add_argument("--json", action="store_true", help="emit the machine-readable report")
    ap.add_argument("--list-suites", action="store_true", help="list suites and exit")
    return ap


def _default_seed():
    raw = os.environ.get("JG_DEFAULT_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"JG_DEFAULT_SEED must be an integer, got {raw!r}") from None


def main(argv=None):
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.list_suites:
        for name, s in SUITES.items():
            print(f"{name:<20} {s.summary} (default trials {s.default_trials})")
        return 0
    if args.suite is None:
        ap.print_usage(sys.stderr)
        print("jordan-gleason: error: a suite name is required", file=sys.stderr)
        return 2
    if args.trials is not None and args.trials < 0:
        print("jordan-gleason: error: --trials must be non-negative", file=sys.stderr)
        return 2
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        report = run_suite(args.suite, args.algebra, args.trials, seed, args.tol)
    except (UnknownSuite, ParseError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"jordan-gleason: error: {msg}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.render())
    return 0 if report.passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command line entry point: run a check suite and print its report."""

import argparse
import sys

from .checks import SUITES, emit_report, run_suite
from .errors import ExactK3Error, UnknownSuite


def build_parser():
    parser = argparse.ArgumentParser(
        prog="exactk3", description="Recompute and certify the bundled surface data.")
    parser.add_argument("--suite", default="all",
                        help=f"one of {', '.join(SUITES)} or all (default: all)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--fixtures", default=None, help="directory of fixture JSON files")
    parser.add_argument("--prime", type=int, default=113, help="reduction prime (default 113)")
    parser.add_argument("--char0", action="store_true",
                        help="also run the slower number-field recomputations")
    parser.add_argument("--output", default=None, help="write the report to this file")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report = run_suite(args.suite, fixtures=args.fixtures, prime=args.prime, char0=args.char0)
    except (UnknownSuite, OSError, ValueError, ExactK3Error) as exc:
        print(f"exactk3: {exc}", file=sys.stderr)
        return 2
    out = emit_report(report, args.format, args.output)
    if args.output is None:
        sys.stdout.write(out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""
The ``toricmorse`` command: reads an arrangement file and prints one report
section, or all of them, as YAML or JSON.

Exit codes: 0 on success, 1 for bad input (or an exhausted search budget), 2
when a mathematical check fails.
"""

import argparse
import logging
import sys

from ..config import DEFAULT_CONFIG
from ..exception import InputError, InternalVerificationError, MatchingSearchError
from ..utils.misc import init_basic_logging
from .parsing import parse, parse_file
from .report import render, session_for

logger = logging.getLogger(__name__)

COMMANDS = (
    "layers",
    "faces",
    "nbc",
    "poincare",
    "salvetti",
    "matching",
    "homology",
    "verify",
    "report",
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFICATION = 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricmorse",
        description="Minimal complexes of toric and hyperplane arrangements",
    )
    parser.add_argument("command", choices=COMMANDS, help="Which section to compute")
    parser.add_argument("path", help="Input file, or '-' for standard input")
    parser.add_argument(
        "--json", action="store_true", help="Print JSON instead of YAML"
    )
    parser.add_argument(
        "--max-deg", type=int, help="Highest homology degree computed from a nerve"
    )
    parser.add_argument(
        "--base-chamber", help="Base chamber of A_0 as a sign string like '-+-'"
    )
    parser.add_argument(
        "--skip-colimit",
        action="store_true",
        help="Skip the colimit reconstruction in 'verify'",
    )
    parser.add_argument(
        "--search-budget",
        type=int,
        help="Backtracking budget for matching searches on large fibers",
    )
    parser.add_argument(
        "--split-nonprimitive",
        action="store_true",
        help="Split non-primitive characters instead of dividing them",
    )
    parser.add_argument(
        "--quiet", "-q", help="Don't enable INFO-level logging", action="store_true"
    )
    parser.add_argument(
        "--verbose", "-v", help="Enable DEBUG-level logging", action="store_true"
    )
    return parser


def config_from_args(args):
    config = DEFAULT_CONFIG
    if args.max_deg is not None:
        config = config.set(max_deg=args.max_deg)
    if args.base_chamber is not None:
        config = config.set(base_chamber=args.base_chamber)
    if args.search_budget is not None:
        config = config.set(search_budget=args.search_budget)
    return config.set(
        skip_colimit=args.skip_colimit, split_nonprimitive=args.split_nonprimitive
    )


def run(command, spec, config=DEFAULT_CONFIG, as_json=False):
    "Computes the report for one command and renders it."
    return render(session_for(spec, config).report(command), as_json=as_json)


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    args = build_parser().parse_args(argv)
    if args.verbose:
        init_basic_logging(logging.DEBUG)
    elif not args.quiet:
        init_basic_logging()

    try:
        if args.path == "-":
            spec = parse(stdin.read())
        else:
            spec = parse_file(args.path)
        output = run(args.command, spec, config_from_args(args), as_json=args.json)
    except (InputError, OSError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except MatchingSearchError as e:
        stderr.write(f"error: {e}\n")
        if e.exhaustive:
            return EXIT_VERIFICATION
        stderr.write("hint: raise --search-budget\n")
        return EXIT_INPUT
    except InternalVerificationError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_VERIFICATION

    stdout.write(output)
    return EXIT_OK


def entry_point():
    sys.exit(main())

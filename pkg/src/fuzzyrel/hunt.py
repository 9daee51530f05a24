"""
Searches the degree grid for counterexamples to a statement, or for points
where equality holds although the claimed equality condition is false.

    fuzzyrel hunt "(A[-]B)[+](B[-]A) == O" --mode violation
    fuzzyrel hunt T2a --mode equality-necessity

The target is a catalog id or a statement. Necessity findings are reported,
never asserted: they do not change the exit status.
"""

import argparse
import logging
import re
import sys

from .check import add_statement_arguments, build_statement, exit_status, run_checks
from .config import (
    EXIT_USAGE,
    CliConfig,
    add_common_arguments,
    config_from_args,
    input_error,
    setup_logging,
    status,
)
from .dsl import RelationStatement
from .errors import FuzzyRelError, NoEqualityClaim, UnknownTheorem
from .registry import ScalarLemma, TheoremEntry, get_entry
from .report import render_findings
from .theorems import add_parameter_arguments, check_one, requested_params

logger = logging.getLogger(__name__)

MODES = ("violation", "equality-necessity")
_ID_RE = re.compile(r"^[A-Z][A-Za-z0-9]*$")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyrel hunt",
        description="Search for counterexamples or for equality outside the claimed condition",
    )
    p.add_argument("target", help="Catalog id (e.g. T2a) or a statement")
    p.add_argument("--mode", choices=MODES, default="violation", help="What to look for (default: violation)")
    add_statement_arguments(p)
    add_parameter_arguments(p)
    add_common_arguments(p)
    return p


def resolve_target(args: argparse.Namespace):
    """A catalog entry when the target names one, otherwise a parsed statement."""
    if _ID_RE.match(args.target):
        return get_entry(args.target)
    return build_statement(args.target, args.given, args.equality_iff)


def hunt_entry(entry, args: argparse.Namespace, config: CliConfig) -> list:
    if isinstance(entry, TheoremEntry) and args.mode == "equality-necessity" and not entry.has_equality_claim:
        raise NoEqualityClaim(entry.id)
    return check_one(entry, requested_params(args), config)


def select(reports: list, mode: str) -> list:
    """Relation reports for violation mode, equality probe reports otherwise."""
    necessity = mode == "equality-necessity"
    return [r for r in reports if (r.mode == "equality") == necessity]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args, parser)
    setup_logging(config.log_level)
    if args.mode == "equality-necessity" and config.samples is not None:
        parser.error("equality-necessity mode runs on the grid; drop --samples")

    try:
        target = resolve_target(args)
    except UnknownTheorem as exc:
        status(f"❌ {exc}")
        return EXIT_USAGE
    except FuzzyRelError as exc:
        return input_error(exc)

    if not isinstance(target, RelationStatement):
        if args.given or args.equality_iff is not None:
            parser.error("--given and --equality-iff apply to statements, not catalog ids")
        if isinstance(target, ScalarLemma) and args.mode == "equality-necessity":
            parser.error("equality-necessity mode needs a set-level statement or theorem id")

    try:
        if isinstance(target, RelationStatement):
            if args.mode == "equality-necessity" and target.equality_condition is None:
                raise NoEqualityClaim("the statement")
            reports = run_checks(target, config)
        else:
            reports = hunt_entry(target, args, config)
    except FuzzyRelError as exc:
        return input_error(exc)

    reports = select(reports, args.mode)
    sys.stdout.write(render_findings(reports, args.mode, config.fmt))
    code = exit_status(reports)
    logger.info("hunt %s in %s mode: exit %d", args.target, args.mode, code)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

"""
Checks an ad-hoc inclusion statement on the degree grid (or on random
samples with --samples) and exits 3 when a violation is found.

    fuzzyrel check "0.5*(A[+]B) >= (A.*B)^0.5" --given "a*b <= 0.25"
"""

import argparse
import logging
import sys

from .config import (
    EXIT_OK,
    EXIT_VIOLATION,
    CliConfig,
    add_common_arguments,
    config_from_args,
    input_error,
    setup_logging,
    status,
)
from .dsl import RelationStatement, parse_constraint, parse_constraints, parse_statement, with_constraints, with_equality_condition
from .errors import FuzzyRelError
from .report import render
from .verifier import GridSpec, check_statement, random_check, resolution_for

logger = logging.getLogger(__name__)


def add_statement_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--given", action="append", default=[],
                   help='Hypothesis on the degrees, e.g. "a + b <= 1"; repeat or comma-join')
    p.add_argument("--equality-iff", default=None,
                   help="Claimed equality condition to probe, e.g. \"a = b\"")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyrel check",
        description="Check an inclusion statement between fuzzy-set terms",
    )
    p.add_argument("statement", nargs="?", help='Statement, e.g. "A .* B <= A & B"')
    p.add_argument("--statement", dest="statement_flag", default=None, help="Statement (alternative to the positional)")
    add_statement_arguments(p)
    add_common_arguments(p)
    return p


def statement_text(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    if args.statement is not None and args.statement_flag is not None:
        parser.error("give the statement either positionally or with --statement, not both")
    text = args.statement if args.statement is not None else args.statement_flag
    if text is None:
        parser.error("a statement is required")
    return text


def build_statement(text: str, given, equality_iff=None) -> RelationStatement:
    """Parse the statement and fold in --given / --equality-iff; both --given spellings normalize alike."""
    statement = parse_statement(text)
    extra = [c for item in given for c in parse_constraints(item)]
    if extra:
        statement = with_constraints(statement, extra)
    if equality_iff is not None:
        statement = with_equality_condition(statement, parse_constraint(equality_iff))
    return statement


def run_checks(statement: RelationStatement, config: CliConfig, statement_id: str = "adhoc", params=None) -> list:
    if config.samples is not None:
        return [random_check(statement, config.random_spec, config.tolerance, config.quotient_mode, statement_id, params,
                             max_findings=config.max_findings)]
    grid = GridSpec(resolution_for(statement.arity, config.resolution, config.wide_resolution))
    return check_statement(statement, grid, config.tolerance, config.quotient_mode, config.workers, statement_id, params,
                           max_findings=config.max_findings)


def exit_status(reports) -> int:
    return EXIT_VIOLATION if any(r.verdict == "violated" for r in reports) else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    text = statement_text(args, parser)
    config = config_from_args(args, parser)
    setup_logging(config.log_level)

    try:
        statement = build_statement(text, args.given, args.equality_iff)
        reports = run_checks(statement, config)
    except FuzzyRelError as exc:
        return input_error(exc)

    sys.stdout.write(render(reports, config.fmt, config.timings))
    code = exit_status(reports)
    status("❌ violation found" if code == EXIT_VIOLATION else "✅ statement holds on every examined tuple")
    return code


if __name__ == "__main__":
    raise SystemExit(main())

"""
Evaluates a set expression on fuzzy sets read from a JSON file and prints the
resulting membership degree of every universe element, in universe order.

    fuzzyrel eval --sets sets.json --expr "A [+] B"
"""

import argparse
import logging
import sys
from pathlib import Path

from .config import EXIT_OK, add_common_arguments, config_from_args, input_error, setup_logging
from .dsl import eval_set, format_expr, parse_expr
from .errors import FuzzyRelError
from .report import render_set
from .sets import load_sets

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyrel eval",
        description="Evaluate a set expression on fuzzy sets from a JSON file",
    )
    p.add_argument("--sets", type=Path, required=True,
                   help='JSON file: {"universe": [...], "sets": {"A": {"x1": 0.2, ...}}}')
    p.add_argument("--expr", required=True, help='Set expression, e.g. "A [+] B"')
    add_common_arguments(p, verification=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args, parser)
    setup_logging(config.log_level)

    try:
        universe, sets = load_sets(args.sets)
        expr = parse_expr(args.expr)
        result = eval_set(expr, sets, config.quotient_mode, universe)
    except FuzzyRelError as exc:
        return input_error(exc)

    logger.debug("evaluated %s on %d element(s)", format_expr(expr), len(universe))
    sys.stdout.write(render_set(format_expr(expr), result, config.fmt))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

"""
Access to the theorem catalog.

    fuzzyrel theorems list
    fuzzyrel theorems check T9
    fuzzyrel theorems check T10 --m 3
    fuzzyrel theorems check-all --format json
    fuzzyrel theorems export
"""

import argparse
import json
import logging
import sys

from .check import exit_status, run_checks
from .config import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_USAGE,
    CliConfig,
    add_common_arguments,
    config_from_args,
    input_error,
    setup_logging,
    status,
)
from .errors import FuzzyRelError, UnknownTheorem
from .registry import EXISTENCE, ScalarLemma, TheoremEntry, export_catalog, get_entry, instantiate, list_lemmas, list_theorems
from .report import describe_entry, render, render_catalog, summarize
from .verifier import check_entry, check_scalar_lemma, run_full_suite

logger = logging.getLogger(__name__)

ACTIONS = ("list", "check", "check-all", "export")


def add_parameter_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=float, default=None, help="Integer parameter m of the Bernoulli entries")
    p.add_argument("--p", type=float, default=None, help="Real exponent p of the power entries")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyrel theorems",
        description="List, check or export the theorem catalog",
    )
    p.add_argument("action", choices=ACTIONS, help="What to do with the catalog")
    p.add_argument("id", nargs="?", help="Catalog id for `check` (e.g. T9, T10, L2)")
    add_parameter_arguments(p)
    add_common_arguments(p)
    return p


def requested_params(args: argparse.Namespace) -> dict:
    return {name: getattr(args, name) for name in ("m", "p") if getattr(args, name) is not None}


def parameter_sets_for(entry, params: dict) -> list:
    """The requested parameters, validated; without any, a parameterized entry runs over its whole sweep."""
    if params or not entry.parameters:
        return [entry.checked_parameters(params) or None]
    return entry.parameter_sets()


def check_one(entry, params: dict, config: CliConfig) -> list:
    """Reports for one catalog entry; existence entries always go to the grid witness search."""
    reports = []
    for ps in parameter_sets_for(entry, params):
        if isinstance(entry, ScalarLemma):
            reports.append(check_scalar_lemma(entry, config.resolution, config.tolerance, ps, config.workers))
        elif config.samples is not None and entry.category != EXISTENCE:
            reports.extend(run_checks(instantiate(entry, ps), config, entry.id, ps))
        else:
            reports.extend(check_entry(entry, ps, config.resolution, config.wide_resolution, config.tolerance,
                                       config.quotient_mode, config.workers, max_findings=config.max_findings))
            if entry.category == EXISTENCE and config.samples is not None:
                reports[-1].notes.append("existence claims are checked by witness search on the grid; --samples ignored")
    return reports


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args, parser)
    setup_logging(config.log_level)

    if args.action == "check" and not args.id:
        parser.error("`theorems check` needs a catalog id")
    if args.action != "check" and args.id:
        parser.error(f"`theorems {args.action}` takes no id")

    if args.action == "list":
        sys.stdout.write(render_catalog(list_theorems() + list_lemmas(), config.fmt))
        return EXIT_OK

    if args.action == "export":
        sys.stdout.write(json.dumps(export_catalog(), sort_keys=True, indent=2) + "\n")
        return EXIT_OK

    if args.action == "check":
        try:
            entry = get_entry(args.id)
        except UnknownTheorem as exc:
            status(f"❌ {exc}")
            return EXIT_USAGE
        if isinstance(entry, TheoremEntry):
            logger.info("checking %s", describe_entry(entry))
        try:
            reports = check_one(entry, requested_params(args), config)
        except FuzzyRelError as exc:
            return input_error(exc)
    else:
        reports = run_full_suite(config.resolution, config.tolerance, config.quotient_mode, config.workers,
                                 config.wide_resolution, progress=config.progress, max_findings=config.max_findings)

    sys.stdout.write(render(reports, config.fmt, config.timings))
    summary = summarize(reports)
    status(f"🔎 {summary['checks']} check(s): {summary['holds']} hold, "
           f"{summary['violated']} violated, {summary['errors']} error(s)")
    if summary["violated"]:
        return exit_status(reports)
    if summary["errors"]:
        return EXIT_INPUT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

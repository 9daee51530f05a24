"""
Command-line configuration shared by every subcommand.

Each subcommand builds its own argparse parser, registers the common flags with
`add_common_arguments` and turns the parsed namespace into a validated
`CliConfig` before doing any work. Invalid values end in `parser.error`
(exit status 2).
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import GridSpecError, ToleranceOutOfRange
from .ops import QuotientMode
from .sets import DEFAULT_EPSILON, Tolerance
from .verifier import DEFAULT_RESOLUTION, MAX_NECESSITY_FINDINGS, WIDE_RESOLUTION, GridSpec, RandomSpec

LOG_FORMAT = "%(levelname)s:%(name)s:%(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
WORKERS_ENV = "FUZZYREL_WORKERS"

# Exit statuses
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


@dataclass(frozen=True)
class CliConfig:
    tolerance: Tolerance = Tolerance()
    resolution: float = DEFAULT_RESOLUTION
    wide_resolution: float = WIDE_RESOLUTION
    quotient_mode: QuotientMode = QuotientMode.LIMIT
    seed: int = 42
    samples: Optional[int] = None
    workers: int = 1
    max_findings: int = MAX_NECESSITY_FINDINGS
    fmt: str = "text"
    log_level: str = "WARNING"
    progress: bool = False
    timings: bool = False

    @property
    def grid(self) -> GridSpec:
        return GridSpec(self.resolution)

    @property
    def random_spec(self) -> Optional[RandomSpec]:
        return RandomSpec(self.samples, self.seed) if self.samples is not None else None


def add_common_arguments(p: argparse.ArgumentParser, verification: bool = True) -> None:
    """Register the shared flags; `verification=False` keeps only those that matter outside grid checks."""
    p.add_argument("--quotient-mode", choices=[m.value for m in QuotientMode], default=QuotientMode.LIMIT.value,
                   help="Bounded quotient at a zero divisor degree: limit value or error (default: limit)")
    p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text",
                   help="Output format (default: text)")
    p.add_argument("--log-level", default="WARNING", help="Logging level (default: WARNING)")
    if not verification:
        return
    p.add_argument("--tolerance", type=float, default=DEFAULT_EPSILON,
                   help="Absolute slack for degree comparisons, 0 < eps < 1e-3 (default: 1e-9)")
    p.add_argument("--resolution", type=float, default=DEFAULT_RESOLUTION,
                   help="Grid step; 1/step must be an integer (default: 0.05)")
    p.add_argument("--wide-resolution", type=float, default=WIDE_RESOLUTION,
                   help="Grid step for statements with 4 or more variables (default: 0.1)")
    p.add_argument("--seed", type=int, default=42, help="Seed for random sampling (default: 42)")
    p.add_argument("--samples", type=int, default=None,
                   help="Check N random tuples instead of the grid")
    p.add_argument("--workers", type=int, default=1,
                   help=f"Worker processes for grid enumeration (default: 1, env {WORKERS_ENV})")
    p.add_argument("--max-findings", type=int, default=MAX_NECESSITY_FINDINGS,
                   help=f"Equality points outside the claimed condition to list; all are counted (default: {MAX_NECESSITY_FINDINGS})")
    p.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    p.add_argument("--timings", action="store_true", help="Include elapsed time in the output")


def _check_grid(parser: argparse.ArgumentParser, flag: str, value: float) -> None:
    try:
        GridSpec(value)
    except GridSpecError as exc:
        parser.error(f"{flag}: {exc}")


def _workers(parser: argparse.ArgumentParser, requested: int) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is not None and raw.strip():
        try:
            requested = int(raw)
        except ValueError:
            parser.error(f"{WORKERS_ENV}={raw!r} is not an integer")
        if requested < 1:
            parser.error(f"{WORKERS_ENV} must be >= 1, got {requested}")
    elif requested < 1:
        parser.error(f"--workers must be >= 1, got {requested}")
    return requested


def config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> CliConfig:
    """Validate the common flags; any invalid value is a usage error."""
    defaults = CliConfig()
    opts = vars(args)
    level = opts.get("log_level", defaults.log_level).upper()
    if level not in LOG_LEVELS:
        parser.error(f"--log-level must be one of {', '.join(LOG_LEVELS)}")
    epsilon = opts.get("tolerance", defaults.tolerance.epsilon)
    if not (0.0 < epsilon < 1e-3):
        parser.error(f"--tolerance must satisfy 0 < eps < 1e-3, got {epsilon!r}")
    try:
        tolerance = Tolerance(epsilon)
    except ToleranceOutOfRange as exc:
        parser.error(str(exc))
    resolution = opts.get("resolution", defaults.resolution)
    wide_resolution = opts.get("wide_resolution", defaults.wide_resolution)
    _check_grid(parser, "--resolution", resolution)
    _check_grid(parser, "--wide-resolution", wide_resolution)
    seed = opts.get("seed", defaults.seed)
    if not (0 <= seed < 2 ** 64):
        parser.error(f"--seed must be an unsigned 64-bit integer, got {seed}")
    samples = opts.get("samples")
    if samples is not None and samples < 1:
        parser.error(f"--samples must be >= 1, got {samples}")
    max_findings = opts.get("max_findings", defaults.max_findings)
    if max_findings < 1:
        parser.error(f"--max-findings must be >= 1, got {max_findings}")
    return CliConfig(
        tolerance=tolerance,
        resolution=resolution,
        wide_resolution=wide_resolution,
        quotient_mode=QuotientMode(opts.get("quotient_mode", defaults.quotient_mode.value)),
        seed=seed,
        samples=samples,
        workers=_workers(parser, opts.get("workers", defaults.workers)),
        max_findings=max_findings,
        fmt=opts.get("fmt", defaults.fmt),
        log_level=level,
        progress=not opts.get("no_progress", False) and sys.stderr.isatty(),
        timings=opts.get("timings", False),
    )


def setup_logging(level: str = "WARNING") -> None:
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING),
                        format=LOG_FORMAT, stream=sys.stderr, force=True)


# Console
def status(message: str) -> None:
    """Human status line; stdout is reserved for the rendered result."""
    print(message, file=sys.stderr)


def input_error(exc: Exception) -> int:
    status(f"❌ {exc}")
    return EXIT_INPUT_ERROR

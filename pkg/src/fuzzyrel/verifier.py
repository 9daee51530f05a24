"""
Checks inclusion statements in degree space.

All operations are pointwise, so a statement holds for every family of fuzzy
sets on every finite universe iff its kernel inequality holds for every tuple
of degrees. The verifier enumerates those tuples on a uniform grid (or samples
them), evaluating each tuple as one virtual universe element.

Grid enumeration is lexicographic in the statement's variable order. With
several workers the first variable's grid values are split into contiguous
slices and the partial results are merged back in slice order, so reports do
not depend on the worker count.
"""

import logging
import math
import random
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Union

from tqdm import tqdm

from .dsl import (
    Binary,
    ConstEmpty,
    ConstUniversal,
    Expr,
    Multiple,
    Power,
    Relation,
    RelationStatement,
    ScalarStatement,
    Scale,
    Var,
    compare,
    compile_arith,
    compile_constraint,
    compile_degree,
    eval_set,
    expr_variables,
    format_expr,
)
from .errors import ArityTooLarge, FuzzyRelError, GridSpecError, NoEqualityClaim
from .ops import BinaryOp, QuotientMode
from .registry import EXISTENCE, ScalarLemma, TheoremEntry, instantiate, list_lemmas, list_theorems
from .sets import DEFAULT_TOLERANCE, Tolerance, Universe, make_fuzzy_set

logger = logging.getLogger(__name__)

# Settings
MAX_ARITY = 5
DEFAULT_RESOLUTION = 0.05
WIDE_RESOLUTION = 0.1
WIDE_ARITY = 4
MAX_VIOLATIONS = 100
MAX_EQUALITY_SAMPLES = 10
MAX_NECESSITY_FINDINGS = 25
ZERO_NECESSITY_FINDINGS = 5
GENERATOR = "mt19937"

HOLDS = "holds"
VIOLATED = "violated"
ERROR = "error"


@dataclass(frozen=True)
class GridSpec:
    resolution: float = DEFAULT_RESOLUTION
    low: float = 0.0
    high: float = 1.0

    def __post_init__(self):
        finite = all(math.isfinite(x) for x in (self.resolution, self.low, self.high))
        if not finite or not self.resolution > 0 or not self.high > self.low:
            raise GridSpecError(f"invalid grid: step {self.resolution!r} over [{self.low!r}, {self.high!r}]")
        per_unit = 1.0 / self.resolution
        if abs(per_unit - round(per_unit)) > 1e-9:
            raise GridSpecError(f"1/resolution must be an integer, got 1/{self.resolution!r} = {per_unit!r}")
        if round(per_unit) < 1:
            raise GridSpecError(f"step {self.resolution!r} is wider than the unit interval")
        steps = (self.high - self.low) * round(per_unit)
        if abs(steps - round(steps)) > 1e-9:
            raise GridSpecError(f"step {self.resolution!r} does not divide [{self.low!r}, {self.high!r}]")

    @property
    def count(self) -> int:
        """Number of steps; the grid has count + 1 points per variable."""
        return round((self.high - self.low) * round(1.0 / self.resolution))

    def values(self) -> tuple:
        n, lo, span = self.count, self.low, self.high - self.low
        return tuple(lo + i * span / n for i in range(n + 1))

    def size(self, arity: int) -> int:
        return (self.count + 1) ** arity


@dataclass(frozen=True)
class RandomSpec:
    samples: int
    seed: int = 42

    def __post_init__(self):
        if self.samples < 1:
            raise GridSpecError(f"samples must be >= 1, got {self.samples}")
        if not (0 <= self.seed < 2 ** 64):
            raise GridSpecError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class Violation:
    point: tuple
    lhs: float
    rhs: float
    detail: str = ""

    def to_dict(self) -> dict:
        data = {"point": list(self.point), "lhs": self.lhs, "rhs": self.rhs}
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class CheckReport:
    id: str
    statement: str
    mode: str
    variables: tuple = ()
    resolution: Optional[float] = None
    parameters: dict = field(default_factory=dict)
    examined: int = 0
    satisfying: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    equality_count: int = 0
    equality_samples: list = field(default_factory=list)
    necessity_count: int = 0
    necessity_findings: list = field(default_factory=list)
    skipped: int = 0
    notes: list = field(default_factory=list)
    generator: Optional[str] = None
    seed: Optional[int] = None
    witness: Optional[Violation] = None
    error: Optional[str] = None
    elapsed_ms: float = 0.0

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return ERROR
        if self.mode == "witness":
            return HOLDS if self.witness is not None else VIOLATED
        return VIOLATED if self.violation_count else HOLDS

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self, timings: bool = False) -> dict:
        data = {
            "id": self.id,
            "statement": self.statement,
            "mode": self.mode,
            "variables": list(self.variables),
            "parameters": dict(self.parameters),
            "examined": self.examined,
            "satisfying": self.satisfying,
            "verdict": self.verdict,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "equality_points": {
                "count": self.equality_count,
                "samples": [v.to_dict() for v in self.equality_samples],
            },
            "necessity_findings": {
                "count": self.necessity_count,
                "samples": [v.to_dict() for v in self.necessity_findings],
            },
            "notes": list(self.notes),
        }
        if self.resolution is not None:
            data["resolution"] = self.resolution
        if self.skipped:
            data["skipped"] = self.skipped
        if self.generator is not None:
            data["generator"] = self.generator
            data["seed"] = self.seed
        if self.mode == "witness":
            data["witness"] = self.witness.to_dict() if self.witness is not None else None
        if self.error is not None:
            data["error"] = self.error
        if timings:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data


# Tuple scanning
class _Evaluator:
    """Compiled form of a set-level or scalar statement."""

    def __init__(self, statement, tol: Tolerance, quotient_mode: QuotientMode):
        self.tol = tol
        if isinstance(statement, RelationStatement):
            names = statement.aliases
            variables = statement.variables
            self.operands = [
                compile_degree(statement.lhs, variables, quotient_mode),
                compile_degree(statement.rhs, variables, quotient_mode),
            ]
            cmp = {Relation.SUBSET: "<=", Relation.SUPERSET: ">=", Relation.EQUAL: "="}[statement.relation]
            self.comparators = (cmp,)
        else:
            names = statement.names
            self.operands = [compile_arith(o, names) for o in statement.relation.operands]
            self.comparators = statement.relation.comparators
        self.constraints = [compile_constraint(c, names, tol) for c in statement.constraints]
        cond = statement.equality_condition
        self.claim = compile_constraint(cond, names, tol) if cond is not None else None

    def admits(self, v: tuple) -> bool:
        return all(c(v) for c in self.constraints)

    def sides(self, v: tuple) -> list:
        return [o(v) for o in self.operands]

    def holds(self, sides: list) -> bool:
        return all(compare(sides[i], cmp, sides[i + 1], self.tol) for i, cmp in enumerate(self.comparators))

    def first_failure(self, sides: list) -> int:
        for i, cmp in enumerate(self.comparators):
            if not compare(sides[i], cmp, sides[i + 1], self.tol):
                return i
        return 0

    def equal(self, sides: list) -> bool:
        eps = self.tol.epsilon
        return all(abs(sides[i] - sides[i + 1]) <= eps for i in range(len(sides) - 1))

    def vanishes(self, sides: list) -> bool:
        return all(abs(s) <= self.tol.epsilon for s in sides)


@dataclass
class _ScanResult:
    necessity_cap: int = MAX_NECESSITY_FINDINGS
    examined: int = 0
    satisfying: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    sufficiency_count: int = 0
    sufficiency_failures: list = field(default_factory=list)
    equality_count: int = 0
    equality_samples: list = field(default_factory=list)
    necessity_count: int = 0
    necessity_findings: list = field(default_factory=list)
    # findings where every side is 0 are kept apart so they cannot fill the cap
    necessity_zero: list = field(default_factory=list)

    def merge(self, other: "_ScanResult") -> None:
        self.examined += other.examined
        self.satisfying += other.satisfying
        self.violation_count += other.violation_count
        self.violations.extend(other.violations[: MAX_VIOLATIONS - len(self.violations)])
        self.sufficiency_count += other.sufficiency_count
        self.sufficiency_failures.extend(other.sufficiency_failures[: MAX_VIOLATIONS - len(self.sufficiency_failures)])
        self.equality_count += other.equality_count
        self.equality_samples.extend(other.equality_samples[: MAX_EQUALITY_SAMPLES - len(self.equality_samples)])
        self.necessity_count += other.necessity_count
        self.necessity_findings.extend(other.necessity_findings[: self.necessity_cap - len(self.necessity_findings)])
        self.necessity_zero.extend(other.necessity_zero[: ZERO_NECESSITY_FINDINGS - len(self.necessity_zero)])

    def necessity_samples(self) -> list:
        """Stored necessity findings in point order, at most ZERO_NECESSITY_FINDINGS of them all-zero."""
        return sorted(self.necessity_zero + self.necessity_findings, key=lambda f: f.point)[: self.necessity_cap]


def _record(bucket: list, cap: int, point: tuple, sides: list, link: int = 0) -> None:
    if len(bucket) < cap:
        bucket.append(Violation(point, sides[link], sides[link + 1]))


def _scan_points(evaluator: _Evaluator, points, necessity_cap: int = MAX_NECESSITY_FINDINGS) -> _ScanResult:
    result = _ScanResult(necessity_cap)
    for v in points:
        result.examined += 1
        if not evaluator.admits(v):
            continue
        result.satisfying += 1
        sides = evaluator.sides(v)
        if not evaluator.holds(sides):
            result.violation_count += 1
            _record(result.violations, MAX_VIOLATIONS, v, sides, evaluator.first_failure(sides))
        equal = evaluator.equal(sides)
        if equal:
            result.equality_count += 1
            _record(result.equality_samples, MAX_EQUALITY_SAMPLES, v, sides)
        if evaluator.claim is not None:
            claimed = evaluator.claim(v)
            if claimed and not equal:
                result.sufficiency_count += 1
                _record(result.sufficiency_failures, MAX_VIOLATIONS, v, sides)
            elif equal and not claimed:
                result.necessity_count += 1
                if evaluator.vanishes(sides):
                    _record(result.necessity_zero, ZERO_NECESSITY_FINDINGS, v, sides)
                else:
                    _record(result.necessity_findings, necessity_cap, v, sides)
    return result


def _scan_slice(task) -> _ScanResult:
    statement, first_values, values, arity, tol, quotient_mode, necessity_cap = task
    evaluator = _Evaluator(statement, tol, quotient_mode)
    points = ((first,) + rest for first in first_values for rest in product(values, repeat=arity - 1))
    return _scan_points(evaluator, points, necessity_cap)


def _slices(values: tuple, parts: int) -> List[tuple]:
    parts = max(1, min(parts, len(values)))
    size, extra = divmod(len(values), parts)
    out, start = [], 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        out.append(values[start:end])
        start = end
    return out


def _scan_grid(
    statement,
    grid: GridSpec,
    tol: Tolerance,
    quotient_mode: QuotientMode,
    workers: int = 1,
    executor: Optional[Executor] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> _ScanResult:
    arity = statement.arity
    if arity > MAX_ARITY:
        raise ArityTooLarge(arity, MAX_ARITY)
    if arity == 0:
        return _scan_points(_Evaluator(statement, tol, quotient_mode), [()], max_findings)
    values = grid.values()
    tasks = [(statement, chunk, values, arity, tol, quotient_mode, max_findings) for chunk in _slices(values, workers)]
    merged = _ScanResult(max_findings)
    if workers <= 1 or len(tasks) == 1:
        for task in tasks:
            merged.merge(_scan_slice(task))
    elif executor is not None:
        for partial in executor.map(_scan_slice, tasks):
            merged.merge(partial)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_scan_slice, tasks):
                merged.merge(partial)
    return merged


def _names(statement) -> tuple:
    return statement.variables if isinstance(statement, RelationStatement) else statement.names


def _text(statement) -> str:
    return statement.text()


def _relation_report(
    statement,
    scan: _ScanResult,
    statement_id: str,
    mode: str,
    resolution: Optional[float],
    params: Optional[Dict],
) -> CheckReport:
    return CheckReport(
        id=statement_id,
        statement=_text(statement),
        mode=mode,
        variables=_names(statement),
        resolution=resolution,
        parameters=dict(params or {}),
        examined=scan.examined,
        satisfying=scan.satisfying,
        violation_count=scan.violation_count,
        violations=scan.violations,
        equality_count=scan.equality_count,
        equality_samples=scan.equality_samples,
        necessity_count=scan.necessity_count,
        necessity_findings=scan.necessity_samples(),
    )


def _equality_report(
    statement,
    scan: _ScanResult,
    statement_id: str,
    resolution: Optional[float],
    params: Optional[Dict],
) -> CheckReport:
    report = _relation_report(statement, scan, statement_id, "equality", resolution, params)
    report.violation_count = scan.sufficiency_count
    report.violations = scan.sufficiency_failures
    return report


def _timed(report: CheckReport, started: float) -> CheckReport:
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    logger.info("%s [%s] %s in %.1f ms", report.id, report.mode, report.verdict, report.elapsed_ms)
    return report


def grid_check(
    statement: Union[RelationStatement, ScalarStatement],
    grid: GridSpec = GridSpec(),
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    workers: int = 1,
    statement_id: str = "adhoc",
    params: Optional[Dict] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> CheckReport:
    """Enumerate every grid tuple, skip those failing the hypotheses, record where the relation fails."""
    started = time.perf_counter()
    scan = _scan_grid(statement, grid, tol, quotient_mode, workers, max_findings=max_findings)
    return _timed(_relation_report(statement, scan, statement_id, "grid", grid.resolution, params), started)


def random_check(
    statement: Union[RelationStatement, ScalarStatement],
    spec: RandomSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    statement_id: str = "adhoc",
    params: Optional[Dict] = None,
    low: float = 0.0,
    high: float = 1.0,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> CheckReport:
    """Same contract as grid_check on `spec.samples` uniform tuples drawn from a seeded MT19937."""
    started = time.perf_counter()
    rng = random.Random(spec.seed)
    arity = statement.arity
    span = high - low
    points = (tuple(low + span * rng.random() for _ in range(arity)) for _ in range(spec.samples))
    scan = _scan_points(_Evaluator(statement, tol, quotient_mode), points, max_findings)
    report = _relation_report(statement, scan, statement_id, "random", None, params)
    report.generator = GENERATOR
    report.seed = spec.seed
    return _timed(report, started)


def probe_equality(
    target: Union[TheoremEntry, RelationStatement],
    grid: GridSpec = GridSpec(),
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    workers: int = 1,
    params: Optional[Dict] = None,
    statement_id: Optional[str] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> CheckReport:
    """
    Sufficiency: every admitted tuple satisfying the equality condition must
    give lhs = rhs (failures are the report's violations). Necessity: tuples
    with lhs = rhs where the condition is false are listed, never asserted.
    """
    if isinstance(target, TheoremEntry):
        statement_id = statement_id or target.id
        if not target.has_equality_claim:
            raise NoEqualityClaim(target.id)
        statement = instantiate(target, params)
    else:
        statement_id = statement_id or "adhoc"
        statement = target
    if statement.equality_condition is None:
        raise NoEqualityClaim(statement_id)
    started = time.perf_counter()
    scan = _scan_grid(statement, grid, tol, quotient_mode, workers, max_findings=max_findings)
    return _timed(_equality_report(statement, scan, statement_id, grid.resolution, params), started)


@dataclass(frozen=True)
class Witness:
    variables: tuple
    point: tuple
    value: float
    scanned: int = 1


def witness_positive(
    expr: Expr,
    grid: GridSpec = GridSpec(),
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
) -> Optional[Witness]:
    """First grid tuple (lexicographic) where the term's degree exceeds epsilon."""
    variables = tuple(dict.fromkeys(expr_variables(expr)))
    kernel = compile_degree(expr, variables, quotient_mode)
    for scanned, point in enumerate(product(grid.values(), repeat=len(variables)), start=1):
        value = kernel(point)
        if value > tol.epsilon:
            return Witness(variables, point, value, scanned)
    return None


def witness_report(
    statement: RelationStatement,
    grid: GridSpec = GridSpec(),
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    statement_id: str = "adhoc",
) -> CheckReport:
    """Report for an existence claim `E == O does not always hold`: look for a point where E > 0."""
    started = time.perf_counter()
    found = witness_positive(statement.lhs, grid, tol, quotient_mode)
    report = CheckReport(
        id=statement_id,
        statement=statement.text(),
        mode="witness",
        variables=found.variables if found else statement.variables,
        resolution=grid.resolution,
    )
    if found is not None:
        report.witness = Violation(found.point, found.value, 0.0)
        report.examined = found.scanned
        report.notes.append("the left side is positive at the witness, so the identity with O does not always hold")
    else:
        report.examined = grid.size(len(set(expr_variables(statement.lhs))))
        report.notes.append(f"no positive value found at resolution {grid.resolution}")
    return _timed(report, started)


def check_scalar(
    statement: ScalarStatement,
    grid: GridSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
    statement_id: str = "adhoc",
    params: Optional[Dict] = None,
    executor: Optional[Executor] = None,
) -> CheckReport:
    started = time.perf_counter()
    scan = _scan_grid(statement, grid, tol, QuotientMode.LIMIT, workers, executor)
    report = _relation_report(statement, scan, statement_id, "grid", grid.resolution, params)
    report.notes.append(f"domain [{grid.low:g}, {grid.high:g}] per variable")
    if statement.equality_condition is not None:
        report.notes.append(
            f"equality condition: {scan.sufficiency_count} tuple(s) satisfy it with lhs != rhs, "
            f"{scan.necessity_count} tuple(s) reach equality outside it"
        )
    return _timed(report, started)


def check_scalar_lemma(
    lemma: ScalarLemma,
    resolution: float = DEFAULT_RESOLUTION,
    tol: Tolerance = DEFAULT_TOLERANCE,
    params: Optional[Dict] = None,
    workers: int = 1,
    executor: Optional[Executor] = None,
) -> CheckReport:
    """Grid check over the lemma's own (possibly super-unit) domain."""
    low, high = lemma.domain
    statement = lemma.instantiate(params)
    return check_scalar(statement, GridSpec(resolution, low, high), tol, workers, lemma.id, params, executor)


# Set level against kernel level
KAPPAS = (0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0)
EXPONENTS = (0.0, 0.25, 0.5, 1.0, 2.0, 3.0)
DEGREES = tuple(i / 20 for i in range(21))


def random_expr(rng: random.Random, variables: Sequence[str], depth: int = 4) -> Expr:
    """A random set term of depth <= `depth` over `variables`."""
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.1:
            return ConstUniversal()
        if r < 0.2:
            return ConstEmpty()
        return Var(rng.choice(list(variables)))
    r = rng.random()
    if r < 0.6:
        op = rng.choice(list(BinaryOp))
        return Binary(op, random_expr(rng, variables, depth - 1), random_expr(rng, variables, depth - 1))
    if r < 0.75:
        return Scale(rng.choice(KAPPAS), random_expr(rng, variables, depth - 1))
    if r < 0.85:
        return Multiple(rng.choice((2, 3)), random_expr(rng, variables, depth - 1))
    return Power(random_expr(rng, variables, depth - 1), rng.choice(EXPONENTS))


def _random_degree(rng: random.Random) -> float:
    return rng.choice(DEGREES) if rng.random() < 0.7 else rng.random()


def set_kernel_equivalence(
    trials: int,
    seed: int = 42,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    max_depth: int = 4,
) -> CheckReport:
    """
    Random universes (1-3 elements), random sets and random terms; the
    set-level result must equal the elementwise kernel result exactly.
    Trials whose evaluation is rejected (e.g. an empty divisor) are skipped
    and counted.
    """
    if trials < 1:
        raise GridSpecError(f"trials must be >= 1, got {trials}")
    started = time.perf_counter()
    rng = random.Random(seed)
    report = CheckReport(id="set-kernel", statement="eval_set == elementwise eval_degree", mode="oracle")
    report.generator = GENERATOR
    report.seed = seed
    for trial in range(trials):
        report.examined += 1
        universe = Universe(tuple(f"x{i + 1}" for i in range(rng.randint(1, 3))))
        variables = ("A", "B", "C")[: rng.randint(1, 3)]
        env = {name: make_fuzzy_set(universe, [_random_degree(rng) for _ in universe]) for name in variables}
        expr = random_expr(rng, variables, rng.randint(0, max_depth))
        kernel = compile_degree(expr, variables, quotient_mode)
        try:
            result = eval_set(expr, env, quotient_mode, universe)
            expected = [kernel(tuple(env[v].degrees[j] for v in variables)) for j in range(len(universe))]
        except FuzzyRelError as exc:
            logger.debug("trial %d skipped: %s", trial, exc)
            report.skipped += 1
            continue
        report.satisfying += 1
        for j, label in enumerate(universe):
            if result.degrees[j] != expected[j]:
                report.violation_count += 1
                if len(report.violations) < MAX_VIOLATIONS:
                    point = tuple(env[v].degrees[j] for v in variables)
                    detail = f"trial {trial}: {format_expr(expr)} at {label}"
                    report.violations.append(Violation(point, result.degrees[j], expected[j], detail))
    report.notes.append(f"{report.skipped} trial(s) skipped by operation preconditions")
    return _timed(report, started)


# Full suite
def resolution_for(arity: int, resolution: float = DEFAULT_RESOLUTION, wide_resolution: float = WIDE_RESOLUTION) -> float:
    return max(resolution, wide_resolution) if arity >= WIDE_ARITY else resolution


def _strictness_note(report: CheckReport) -> None:
    if report.equality_count:
        first = report.equality_samples[0]
        report.notes.append(
            f"claimed strict inclusion fails at {report.equality_count} tuple(s); "
            f"first at {list(first.point)} with lhs = {first.lhs!r}, rhs = {first.rhs!r}"
        )


def check_statement(
    statement: RelationStatement,
    grid: GridSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    workers: int = 1,
    statement_id: str = "adhoc",
    params: Optional[Dict] = None,
    executor: Optional[Executor] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> List[CheckReport]:
    """
    One grid scan giving the relation report and, when the statement carries
    an equality condition, the equality probe report as well.
    """
    started = time.perf_counter()
    scan = _scan_grid(statement, grid, tol, quotient_mode, workers, executor, max_findings)
    reports = [_timed(_relation_report(statement, scan, statement_id, "grid", grid.resolution, params), started)]
    if statement.equality_condition is not None:
        reports.append(_equality_report(statement, scan, statement_id, grid.resolution, params))
    return reports


def check_entry(
    entry: TheoremEntry,
    params: Optional[Dict] = None,
    resolution: float = DEFAULT_RESOLUTION,
    wide_resolution: float = WIDE_RESOLUTION,
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    workers: int = 1,
    executor: Optional[Executor] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> List[CheckReport]:
    """Grid check of one instantiated entry plus, when it has one, its equality probe."""
    statement = instantiate(entry, params)
    grid = GridSpec(resolution_for(statement.arity, resolution, wide_resolution))
    if entry.category == EXISTENCE:
        return [witness_report(statement, grid, tol, quotient_mode, entry.id)]
    reports = check_statement(statement, grid, tol, quotient_mode, workers, entry.id, params, executor, max_findings)
    if entry.strict:
        _strictness_note(reports[0])
    if len(reports) > 1:
        reports[1].notes.append(f"equality condition is {entry.equality_claim_kind}")
    return reports


def _error_report(entry_id: str, text: str, params: Optional[Dict], exc: Exception) -> CheckReport:
    report = CheckReport(id=entry_id, statement=text, mode="grid", parameters=dict(params or {}))
    report.error = str(exc)
    logger.error("%s failed: %s", entry_id, exc)
    return report


def _run_entry(entry, params, resolution, wide_resolution, tol, quotient_mode, workers, executor, max_findings) -> List[CheckReport]:
    try:
        if isinstance(entry, ScalarLemma):
            return [check_scalar_lemma(entry, resolution, tol, params, workers, executor)]
        return check_entry(entry, params, resolution, wide_resolution, tol, quotient_mode, workers, executor, max_findings)
    except FuzzyRelError as exc:
        return [_error_report(entry.id, entry.dsl if isinstance(entry, TheoremEntry) else entry.relation, params, exc)]


def run_full_suite(
    resolution: float = DEFAULT_RESOLUTION,
    tol: Tolerance = DEFAULT_TOLERANCE,
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    workers: int = 1,
    wide_resolution: float = WIDE_RESOLUTION,
    progress: bool = False,
    entries: Optional[Sequence[Union[TheoremEntry, ScalarLemma]]] = None,
    max_findings: int = MAX_NECESSITY_FINDINGS,
) -> List[CheckReport]:
    """Every catalog entry over its parameter sweep, every scalar lemma; never aborts."""
    if entries is None:
        entries = list_theorems() + list_lemmas()
    reports = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for entry in tqdm(entries, unit="entry", disable=not progress):
            for params in entry.parameter_sets():
                reports.extend(_run_entry(entry, params or None, resolution, wide_resolution,
                                          tol, quotient_mode, workers, executor, max_findings))
    finally:
        if executor is not None:
            executor.shutdown()
    logger.info("suite: %d report(s) over %d entries", len(reports), len(entries))
    return reports

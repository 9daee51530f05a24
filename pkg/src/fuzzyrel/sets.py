"""
Fuzzy sets on finite, ordered universes and the two order relations
(inclusion and equality) every theorem in the catalog is stated in.

Sets can be loaded from a JSON file of the form

    {"universe": ["x1", "x2"], "sets": {"A": {"x1": 0.2, "x2": 0.7}}}
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DegreeOutOfRange,
    DuplicateElement,
    LengthMismatch,
    SetsFileError,
    ToleranceOutOfRange,
    UniverseMismatch,
)

logger = logging.getLogger(__name__)

# Settings
DEFAULT_EPSILON = 1e-9
MAX_EPSILON = 1e-3

MembershipDegree = float


def validate_degree(value: float, index: int = 0) -> MembershipDegree:
    """Return `value` as a float, or raise if it is not a finite number in [0, 1]."""
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise DegreeOutOfRange(index, value) from None
    if isinstance(value, bool) or not math.isfinite(v) or v < 0.0 or v > 1.0:
        raise DegreeOutOfRange(index, value)
    return v


@dataclass(frozen=True)
class Universe:
    elements: tuple

    def __post_init__(self):
        labels = tuple(str(e) for e in self.elements)
        seen = set()
        for label in labels:
            if label in seen:
                raise DuplicateElement(label)
            seen.add(label)
        object.__setattr__(self, "elements", labels)

    @classmethod
    def of(cls, *labels: str) -> "Universe":
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)


@dataclass(frozen=True)
class Tolerance:
    """Absolute slack for degree comparisons. epsilon=0 gives exact comparisons."""

    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if not (0.0 <= self.epsilon < MAX_EPSILON):
            raise ToleranceOutOfRange(self.epsilon)


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class FuzzySet:
    universe: Universe
    degrees: tuple

    def degree_at(self, label: str) -> MembershipDegree:
        return self.degrees[self.universe.index(label)]

    def items(self) -> Iterator[tuple]:
        return zip(self.universe.elements, self.degrees)

    def as_dict(self) -> dict:
        return dict(self.items())


def make_fuzzy_set(universe: Universe, degrees: Sequence[float]) -> FuzzySet:
    degrees = list(degrees)
    if len(degrees) != len(universe):
        raise LengthMismatch(len(universe), len(degrees))
    return FuzzySet(universe, tuple(validate_degree(d, i) for i, d in enumerate(degrees)))


def universal_set(universe: Universe) -> FuzzySet:
    """The set X: every element belongs with degree 1."""
    return FuzzySet(universe, (1.0,) * len(universe))


def empty_set(universe: Universe) -> FuzzySet:
    """The set O (the empty fuzzy set): every degree is 0."""
    return FuzzySet(universe, (0.0,) * len(universe))


def require_same_universe(first: FuzzySet, *others: FuzzySet) -> Universe:
    for other in others:
        if other.universe != first.universe:
            raise UniverseMismatch(first.universe, other.universe)
    return first.universe


def is_included_in(a: FuzzySet, b: FuzzySet, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """A ⊆ B: mu_A(x) <= mu_B(x) + epsilon for every x."""
    require_same_universe(a, b)
    return all(x <= y + tol.epsilon for x, y in zip(a.degrees, b.degrees))


def equals(a: FuzzySet, b: FuzzySet, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """A = B: |mu_A(x) - mu_B(x)| <= epsilon for every x."""
    require_same_universe(a, b)
    return all(abs(x - y) <= tol.epsilon for x, y in zip(a.degrees, b.degrees))


# File format
def sets_from_dict(data: dict) -> tuple:
    """Build (universe, {name: FuzzySet}) from the decoded JSON document."""
    if not isinstance(data, dict) or "universe" not in data or "sets" not in data:
        raise SetsFileError('expected an object with "universe" and "sets" keys')
    if not isinstance(data["universe"], list) or not isinstance(data["sets"], dict):
        raise SetsFileError('"universe" must be a list and "sets" an object')

    universe = Universe(tuple(data["universe"]))
    expected = set(universe.elements)
    sets = {}
    for name, memberships in data["sets"].items():
        if not isinstance(memberships, dict):
            raise SetsFileError(f"set {name!r}: expected an object mapping elements to degrees")
        missing = [e for e in universe.elements if e not in memberships]
        extra = sorted(set(memberships) - expected)
        if missing:
            raise SetsFileError(f"set {name!r}: no degree for element(s) {missing}")
        if extra:
            raise SetsFileError(f"set {name!r}: unknown element(s) {extra}")
        try:
            sets[name] = make_fuzzy_set(universe, [memberships[e] for e in universe.elements])
        except DegreeOutOfRange as exc:
            label = universe.elements[exc.index]
            raise SetsFileError(f"set {name!r}, element {label!r}: {exc}") from exc
        if name in ("X", "O"):
            logger.warning("set %r shadows a reserved constant and cannot be referenced", name)
    return universe, sets


def load_sets(path: Union[str, Path]) -> tuple:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise SetsFileError(f"sets file not found: {path}") from None
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SetsFileError(f"cannot read sets file {path}: {exc}") from exc
    universe, sets = sets_from_dict(data)
    logger.info("loaded %d set(s) on a universe of %d element(s) from %s", len(sets), len(universe), path)
    return universe, sets


def universe_of(sets: Iterable[FuzzySet]) -> Universe:
    sets = list(sets)
    if not sets:
        raise SetsFileError("no fuzzy sets given")
    return require_same_universe(*sets)

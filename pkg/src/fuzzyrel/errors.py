"""
Exception hierarchy shared by every fuzzyrel module.

Library code raises these; only the subcommand entry points turn them into
exit codes (1 for input errors, 2 for usage errors).
"""

from typing import Optional


class FuzzyRelError(Exception):
    """Base class of everything fuzzyrel raises on purpose."""


# Fuzzy sets
class LengthMismatch(FuzzyRelError, ValueError):
    def __init__(self, expected: int, found: int):
        super().__init__(f"expected {expected} degrees, got {found}")
        self.expected = expected
        self.found = found


class DegreeOutOfRange(FuzzyRelError, ValueError):
    def __init__(self, index: int, value: float):
        super().__init__(f"degree #{index} = {value!r} is not a finite number in [0, 1]")
        self.index = index
        self.value = value


class DuplicateElement(FuzzyRelError, ValueError):
    def __init__(self, label: str):
        super().__init__(f"universe element {label!r} appears more than once")
        self.label = label


class UniverseMismatch(FuzzyRelError, ValueError):
    def __init__(self, left, right):
        super().__init__(f"fuzzy sets live on different universes: {list(left)} vs {list(right)}")


class ToleranceOutOfRange(FuzzyRelError, ValueError):
    def __init__(self, epsilon: float):
        super().__init__(f"tolerance {epsilon!r} must satisfy 0 <= epsilon < 1e-3")
        self.epsilon = epsilon


class SetsFileError(FuzzyRelError):
    """The fuzzy-set JSON file is unreadable or does not follow the format."""


# Operations
class ScalarOutOfRange(FuzzyRelError, ValueError):
    def __init__(self, kappa: float):
        super().__init__(f"scaling factor {kappa!r} must lie in [0, 1]")
        self.kappa = kappa


class ExponentError(FuzzyRelError, ValueError):
    """An exponent outside the domain of the power operation."""


class NegativeExponent(ExponentError):
    def __init__(self, p: float):
        super().__init__(f"exponent {p!r} must be >= 0")
        self.p = p


class EmptyDivisor(FuzzyRelError, ValueError):
    def __init__(self):
        super().__init__("bounded quotient divisor is the empty set (identically 0)")


class ZeroDegreeDivisor(FuzzyRelError, ValueError):
    def __init__(self, element: Optional[str] = None):
        where = f" at element {element!r}" if element is not None else ""
        super().__init__(f"bounded quotient divisor has degree 0{where} (strict mode)")
        self.element = element


# Expression language
class LexError(FuzzyRelError, ValueError):
    def __init__(self, position: int, message: str):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ParseError(FuzzyRelError, ValueError):
    def __init__(self, position: int, expected: str, found: str):
        super().__init__(f"expected {expected} at position {position}, found {found}")
        self.position = position
        self.expected = expected
        self.found = found


class UnboundVariable(FuzzyRelError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"variable {self.name!r} is not bound"


class ArithmeticDomainError(FuzzyRelError, ValueError):
    """Constraint arithmetic left the reals (division by zero, 0 to a negative power)."""


# Catalog and verifier
class UnknownTheorem(FuzzyRelError, KeyError):
    def __init__(self, theorem_id: str):
        super().__init__(theorem_id)
        self.theorem_id = theorem_id

    def __str__(self) -> str:
        return f"unknown theorem id {self.theorem_id!r}"


class ParameterOutOfRange(FuzzyRelError, ValueError):
    def __init__(self, name: str, value, admissible: str):
        super().__init__(f"parameter {name}={value!r} outside admissible range {admissible}")
        self.name = name
        self.value = value


class ArityTooLarge(FuzzyRelError, ValueError):
    def __init__(self, arity: int, limit: int):
        super().__init__(f"statement has {arity} variables, grid enumeration supports at most {limit}")
        self.arity = arity


class NoEqualityClaim(FuzzyRelError, ValueError):
    def __init__(self, theorem_id: str):
        super().__init__(f"{theorem_id} has no equality condition to probe")
        self.theorem_id = theorem_id


class GridSpecError(FuzzyRelError, ValueError):
    """Grid or sampling parameters that cannot describe a finite lattice."""

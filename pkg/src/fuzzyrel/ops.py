"""
Pointwise operations on fuzzy sets.

Every operation is a degree kernel (a pure function on numbers in [0, 1]) and
a set-level map that applies the kernel element by element. Set-level results
therefore agree with the kernels bit for bit.
"""

import enum
from dataclasses import dataclass, field
from typing import Callable

from .errors import EmptyDivisor, ExponentError, NegativeExponent, ScalarOutOfRange, ZeroDegreeDivisor
from .sets import FuzzySet, require_same_universe


class QuotientMode(str, enum.Enum):
    """How the bounded quotient treats a divisor degree of 0."""

    LIMIT = "limit"
    STRICT = "strict"


class BinaryOp(str, enum.Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    ALGEBRAIC_SUM = "algebraic_sum"
    ALGEBRAIC_PRODUCT = "algebraic_product"
    BOUNDED_SUM = "bounded_sum"
    BOUNDED_PRODUCT = "bounded_product"
    BOUNDED_DIFFERENCE = "bounded_difference"
    BOUNDED_QUOTIENT = "bounded_quotient"


def clamp(v: float) -> float:
    return 0.0 if v < 0.0 else (1.0 if v > 1.0 else v)


# Degree kernels
def union_kernel(a: float, b: float) -> float:
    return a if a >= b else b


def intersection_kernel(a: float, b: float) -> float:
    return a if a <= b else b


def algebraic_sum_kernel(a: float, b: float) -> float:
    return clamp(a + b - a * b)


def algebraic_product_kernel(a: float, b: float) -> float:
    return clamp(a * b)


def bounded_sum_kernel(a: float, b: float) -> float:
    return clamp(min(a + b, 1.0))


def bounded_product_kernel(a: float, b: float) -> float:
    return clamp(max(a + b - 1.0, 0.0))


def bounded_difference_kernel(a: float, b: float) -> float:
    return clamp(max(a - b, 0.0))


def bounded_quotient_kernel(a: float, b: float, mode: QuotientMode = QuotientMode.LIMIT) -> float:
    if b == 0.0:
        if mode is QuotientMode.STRICT:
            raise ZeroDegreeDivisor()
        # limit of min{a/b, 1} as b -> 0+
        return 1.0 if a > 0.0 else 0.0
    return clamp(min(a / b, 1.0))


def scale_kernel(kappa: float, a: float) -> float:
    return clamp(kappa * a)


def power_kernel(a: float, p: float) -> float:
    # 0.0 ** 0 == 1.0, so A^0 = X holds even where a = 0
    return clamp(a ** p)


def multiple_kernel(n: int, a: float) -> float:
    """n-fold bounded sum a (+) a (+) ... (+) a."""
    return clamp(min(n * a, 1.0))


@dataclass(frozen=True)
class DegreeKernel:
    name: str
    arity: int
    fn: Callable = field(repr=False)

    def __call__(self, *degrees: float) -> float:
        return self.fn(*degrees)


KERNELS = {
    BinaryOp.UNION: DegreeKernel("union", 2, union_kernel),
    BinaryOp.INTERSECTION: DegreeKernel("intersection", 2, intersection_kernel),
    BinaryOp.ALGEBRAIC_SUM: DegreeKernel("algebraic_sum", 2, algebraic_sum_kernel),
    BinaryOp.ALGEBRAIC_PRODUCT: DegreeKernel("algebraic_product", 2, algebraic_product_kernel),
    BinaryOp.BOUNDED_SUM: DegreeKernel("bounded_sum", 2, bounded_sum_kernel),
    BinaryOp.BOUNDED_PRODUCT: DegreeKernel("bounded_product", 2, bounded_product_kernel),
    BinaryOp.BOUNDED_DIFFERENCE: DegreeKernel("bounded_difference", 2, bounded_difference_kernel),
    BinaryOp.BOUNDED_QUOTIENT: DegreeKernel("bounded_quotient", 2, bounded_quotient_kernel),
}


def check_scalar(kappa: float) -> float:
    kappa = float(kappa)
    if not (0.0 <= kappa <= 1.0):
        raise ScalarOutOfRange(kappa)
    return kappa


def check_exponent(p: float) -> float:
    p = float(p)
    if not p >= 0.0:
        raise NegativeExponent(p)
    return p


def scale_degree_kernel(kappa: float) -> DegreeKernel:
    kappa = check_scalar(kappa)
    return DegreeKernel(f"scale[{kappa!r}]", 1, lambda a: scale_kernel(kappa, a))


def power_degree_kernel(p: float) -> DegreeKernel:
    p = check_exponent(p)
    return DegreeKernel(f"power[{p!r}]", 1, lambda a: power_kernel(a, p))


# Set-level operations
def _map(kernel: Callable, *sets: FuzzySet) -> FuzzySet:
    universe = require_same_universe(*sets)
    return FuzzySet(universe, tuple(kernel(*ds) for ds in zip(*(s.degrees for s in sets))))


def apply_binary(op: BinaryOp, a: FuzzySet, b: FuzzySet, quotient_mode: QuotientMode = QuotientMode.LIMIT) -> FuzzySet:
    if op is BinaryOp.BOUNDED_QUOTIENT:
        return bounded_quotient(a, b, strict=quotient_mode is QuotientMode.STRICT)
    return _map(KERNELS[op].fn, a, b)


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(union_kernel, a, b)


def intersection(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(intersection_kernel, a, b)


def algebraic_sum(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(algebraic_sum_kernel, a, b)


def algebraic_product(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(algebraic_product_kernel, a, b)


def bounded_sum(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(bounded_sum_kernel, a, b)


def bounded_product(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(bounded_product_kernel, a, b)


def bounded_difference(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _map(bounded_difference_kernel, a, b)


def bounded_quotient(a: FuzzySet, b: FuzzySet, strict: bool = False) -> FuzzySet:
    """
    min{a/b, 1} pointwise. The divisor must not be the empty set. Where a
    divisor degree is 0, strict mode raises and limit mode returns 1 for a > 0
    and 0 for a = 0.
    """
    universe = require_same_universe(a, b)
    if all(d == 0.0 for d in b.degrees):
        raise EmptyDivisor()
    mode = QuotientMode.STRICT if strict else QuotientMode.LIMIT
    if strict:
        for label, d in zip(universe.elements, b.degrees):
            if d == 0.0:
                raise ZeroDegreeDivisor(label)
    return FuzzySet(universe, tuple(bounded_quotient_kernel(x, y, mode) for x, y in zip(a.degrees, b.degrees)))


def scalar_multiply(kappa: float, a: FuzzySet) -> FuzzySet:
    kappa = check_scalar(kappa)
    return _map(lambda x: scale_kernel(kappa, x), a)


def power(a: FuzzySet, p: float) -> FuzzySet:
    p = check_exponent(p)
    return _map(lambda x: power_kernel(x, p), a)


def power_nat(a: FuzzySet, n: int) -> FuzzySet:
    """A^n as n-1 successive algebraic products of A with itself."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ExponentError(f"natural exponent {n!r} must be an integer >= 1")
    result = a
    for _ in range(int(n) - 1):
        result = algebraic_product(result, a)
    return result


def multiple(n: int, a: FuzzySet) -> FuzzySet:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ScalarOutOfRange(n)
    return _map(lambda x: multiple_kernel(int(n), x), a)

"""
A small expression language for fuzzy-set terms and inclusion statements.

Set terms use uppercase variables, `X` (universal set) and `O` (empty set):

    |  union            &    intersection
    .+ algebraic sum    .*   algebraic product
    [+] bounded sum     [*]  bounded product
    [-] bounded diff.   [/]  bounded quotient
    ^  power (literal exponent), `k * E` scaling, `E / n` scaling by 1/n

A statement relates two terms and may carry hypotheses on the degrees
(lowercase aliases of the set variables) and a claimed equality condition:

    0.5*(A[+]B) >= (A.*B)^0.5 given a*b <= 0.25 equality_iff a = b
"""

import logging
import math
import re
import enum
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Union

from .errors import ArithmeticDomainError, LexError, ParseError, UnboundVariable
from .ops import (
    BinaryOp,
    KERNELS,
    QuotientMode,
    apply_binary,
    bounded_quotient_kernel,
    multiple,
    multiple_kernel,
    power,
    power_degree_kernel,
    scalar_multiply,
    scale_degree_kernel,
)
from .sets import DEFAULT_TOLERANCE, FuzzySet, Tolerance, Universe, empty_set, universal_set, universe_of

logger = logging.getLogger(__name__)

UNIVERSAL_NAME = "X"
EMPTY_NAME = "O"
KEYWORDS = {"given", "equality_iff", "and", "or", "min", "max"}


# Lexer
@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int
    value: Optional[float] = None

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


_TOKEN_SPEC = [
    ("NUMBER", r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?"),
    ("VAR", r"[A-Z][A-Za-z0-9]*"),
    ("NAME", r"[a-z][a-z0-9_]*"),
    ("BSUM", r"\[\+\]"),
    ("BPROD", r"\[\*\]"),
    ("BDIFF", r"\[-\]"),
    ("BQUOT", r"\[/\]"),
    ("ALG_SUM", r"\.\+"),
    ("ALG_PROD", r"\.\*"),
    ("LE", r"<="),
    ("GE", r">="),
    ("EQEQ", r"=="),
    ("LT", r"<"),
    ("GT", r">"),
    ("EQ", r"="),
    ("UNION", r"\|"),
    ("INTERSECTION", r"&"),
    ("CARET", r"\^"),
    ("STAR", r"\*"),
    ("SLASH", r"/"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("COMMA", r","),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in _TOKEN_SPEC))
_WHITESPACE = " \t\r\n"


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8"))


def tokenize(source: str) -> List[Token]:
    """Split `source` into tokens (longest match, whitespace skipped), ending with EOF."""
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        if source[i] in _WHITESPACE:
            i += 1
            continue
        m = _TOKEN_RE.match(source, i)
        if m is None:
            if source[i] == "[":
                end = source.find("]", i)
                shown = source[i:end + 1] if end != -1 else source[i:]
                raise LexError(_byte_offset(source, i), f"unknown operator {shown!r}")
            raise LexError(_byte_offset(source, i), f"illegal character {source[i]!r}")
        kind = m.lastgroup
        text = m.group()
        end = m.end()
        if kind == "NUMBER":
            if end < n and (source[end].isalnum() or source[end] == "_"
                            or (source[end] == "." and end + 1 < n and source[end + 1].isdigit())):
                raise LexError(_byte_offset(source, i), f"malformed number {source[i:end + 1]!r}")
            value = float(text)
            if not math.isfinite(value):
                raise LexError(_byte_offset(source, i), f"number out of range {text!r}")
            tokens.append(Token(kind, text, i, value))
        elif kind == "NAME" and text in KEYWORDS:
            tokens.append(Token(text.upper(), text, i))
        else:
            tokens.append(Token(kind, text, i))
        i = end
    tokens.append(Token("EOF", "", _byte_offset(source, n)))
    return tokens


# Set expressions
@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class ConstUniversal:
    pass


@dataclass(frozen=True)
class ConstEmpty:
    pass


@dataclass(frozen=True)
class Binary:
    op: BinaryOp
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Scale:
    kappa: float
    inner: "Expr"


@dataclass(frozen=True)
class Multiple:
    """n-fold bounded sum of `inner` (integer prefix n >= 2)."""

    n: int
    inner: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    p: float


Expr = Union[Var, ConstUniversal, ConstEmpty, Binary, Scale, Multiple, Power]

ADDITIVE_OPS = {
    "UNION": BinaryOp.UNION,
    "ALG_SUM": BinaryOp.ALGEBRAIC_SUM,
    "BSUM": BinaryOp.BOUNDED_SUM,
    "BDIFF": BinaryOp.BOUNDED_DIFFERENCE,
}
MULTIPLICATIVE_OPS = {
    "INTERSECTION": BinaryOp.INTERSECTION,
    "ALG_PROD": BinaryOp.ALGEBRAIC_PRODUCT,
    "BPROD": BinaryOp.BOUNDED_PRODUCT,
    "BQUOT": BinaryOp.BOUNDED_QUOTIENT,
}
SYMBOLS = {
    BinaryOp.UNION: "|",
    BinaryOp.INTERSECTION: "&",
    BinaryOp.ALGEBRAIC_SUM: ".+",
    BinaryOp.ALGEBRAIC_PRODUCT: ".*",
    BinaryOp.BOUNDED_SUM: "[+]",
    BinaryOp.BOUNDED_PRODUCT: "[*]",
    BinaryOp.BOUNDED_DIFFERENCE: "[-]",
    BinaryOp.BOUNDED_QUOTIENT: "[/]",
}
_ADDITIVE = set(ADDITIVE_OPS.values())


# Constraint arithmetic
@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class DegreeVar:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Arith"


@dataclass(frozen=True)
class BinArith:
    op: str  # one of + - * / ^
    left: "Arith"
    right: "Arith"


@dataclass(frozen=True)
class Call:
    fn: str  # min | max
    args: tuple


Arith = Union[Num, DegreeVar, Neg, BinArith, Call]


@dataclass(frozen=True)
class Comparison:
    """operands[0] cmp[0] operands[1] cmp[1] ... ; a chain when longer than two."""

    operands: tuple
    comparators: tuple


@dataclass(frozen=True)
class BoolOp:
    op: str  # and | or
    items: tuple


ConstraintExpr = Union[Comparison, BoolOp]

COMPARATORS = {"LE": "<=", "LT": "<", "GE": ">=", "GT": ">", "EQ": "=", "EQEQ": "="}


class Relation(str, enum.Enum):
    SUBSET = "<="
    SUPERSET = ">="
    EQUAL = "=="


RELATIONS = {"LE": Relation.SUBSET, "GE": Relation.SUPERSET, "EQEQ": Relation.EQUAL}


@dataclass(frozen=True)
class RelationStatement:
    lhs: Expr
    rhs: Expr
    relation: Relation
    variables: tuple = ()
    constraints: tuple = ()
    equality_condition: Optional[ConstraintExpr] = None

    @property
    def aliases(self) -> tuple:
        """Lowercase degree names, in the order of `variables`."""
        return tuple(v.lower() for v in self.variables)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def text(self) -> str:
        return format_statement(self)


@dataclass(frozen=True)
class ScalarStatement:
    """An inequality (or chain) between real-valued terms over lowercase variables."""

    relation: Comparison
    names: tuple = ()
    constraints: tuple = ()
    equality_condition: Optional[ConstraintExpr] = None

    @property
    def arity(self) -> int:
        return len(self.names)

    def text(self) -> str:
        text = format_constraint(self.relation)
        if self.constraints:
            text += " given " + ", ".join(format_constraint(c) for c in self.constraints)
        if self.equality_condition is not None:
            text += " equality_iff " + format_constraint(self.equality_condition)
        return text


# Parser
class Parser:
    def __init__(self, tokens: Sequence[Token]):
        self._tokens = list(tokens)
        if not self._tokens or self._tokens[-1].kind != "EOF":
            end = self._tokens[-1].pos + len(self._tokens[-1].text) if self._tokens else 0
            self._tokens.append(Token("EOF", "", end))
        self._index = 0

    @property
    def token(self) -> Token:
        return self._tokens[self._index]

    def advance(self) -> Token:
        tok = self.token
        if tok.kind != "EOF":
            self._index += 1
        return tok

    def accept(self, *kinds: str) -> Optional[Token]:
        if self.token.kind in kinds:
            return self.advance()
        return None

    def expect(self, kind: str, expected: str) -> Token:
        if self.token.kind != kind:
            self.fail(expected)
        return self.advance()

    def fail(self, expected: str):
        raise ParseError(self.token.pos, expected, self.token.describe())

    def expect_end(self):
        if self.token.kind != "EOF":
            self.fail("end of input")

    # statement := expr rel expr [given constraint {, constraint}] [equality_iff constraint]
    def statement(self) -> RelationStatement:
        lhs = self.expr()
        rel_tok = self.accept(*RELATIONS)
        if rel_tok is None:
            self.fail("'<=', '>=' or '=='")
        rhs = self.expr()
        constraints = []
        if self.accept("GIVEN"):
            constraints = self.constraint_list()
        condition = None
        if self.accept("EQUALITY_IFF"):
            condition = self.condition()
        self.expect_end()
        return build_statement(lhs, rhs, RELATIONS[rel_tok.kind], constraints, condition)

    def scalar_statement(self) -> ScalarStatement:
        relation = self.comparison()
        constraints = []
        if self.accept("GIVEN"):
            constraints = self.constraint_list()
        condition = None
        if self.accept("EQUALITY_IFF"):
            condition = self.condition()
        self.expect_end()
        parts = [relation] + constraints + ([condition] if condition is not None else [])
        names = _unique(n for c in parts for n in constraint_names(c))
        return ScalarStatement(relation, tuple(names), tuple(constraints), condition)

    def expr(self) -> Expr:
        left = self.mulexpr()
        while self.token.kind in ADDITIVE_OPS:
            op = ADDITIVE_OPS[self.advance().kind]
            left = Binary(op, left, self.mulexpr())
        return left

    def mulexpr(self) -> Expr:
        left = self.scaled()
        while self.token.kind in MULTIPLICATIVE_OPS:
            op = MULTIPLICATIVE_OPS[self.advance().kind]
            left = Binary(op, left, self.scaled())
        return left

    def scaled(self) -> Expr:
        if self.token.kind == "NUMBER":
            num = self.advance()
            self.expect("STAR", "'*' after a scaling factor")
            inner = self.scaled()
            value = num.value
            if 0.0 <= value <= 1.0:
                return Scale(value, inner)
            if value == int(value):
                return Multiple(int(value), inner)
            raise ParseError(num.pos, "a scaling factor in [0, 1] or an integer multiple", repr(num.text))
        node = self.postfix()
        if self.token.kind == "SLASH":
            self.advance()
            num = self.expect("NUMBER", "a divisor >= 1")
            if num.value < 1.0:
                raise ParseError(num.pos, "a divisor >= 1", repr(num.text))
            node = Scale(1.0 / num.value, node)
        return node

    def postfix(self) -> Expr:
        base = self.atom()
        if self.accept("CARET"):
            num = self.expect("NUMBER", "a numeric exponent")
            return Power(base, num.value)
        return base

    def atom(self) -> Expr:
        tok = self.token
        if tok.kind == "VAR":
            self.advance()
            if tok.text == UNIVERSAL_NAME:
                return ConstUniversal()
            if tok.text == EMPTY_NAME:
                return ConstEmpty()
            return Var(tok.text)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expr()
            self.expect("RPAREN", "')'")
            return inner
        self.fail("a set variable, X, O or '('")

    # condition := conj {or conj} ; conj := comparison {and comparison}
    def constraint_list(self) -> List[ConstraintExpr]:
        items = [self.condition()]
        while self.accept("COMMA"):
            items.append(self.condition())
        return items

    def condition(self) -> ConstraintExpr:
        items = [self.conjunction()]
        while self.accept("OR"):
            items.append(self.conjunction())
        return items[0] if len(items) == 1 else BoolOp("or", tuple(items))

    def conjunction(self) -> ConstraintExpr:
        items = [self.comparison()]
        while self.accept("AND"):
            items.append(self.comparison())
        return items[0] if len(items) == 1 else BoolOp("and", tuple(items))

    def comparison(self) -> Comparison:
        operands = [self.arith()]
        comparators = []
        while self.token.kind in COMPARATORS:
            comparators.append(COMPARATORS[self.advance().kind])
            operands.append(self.arith())
        if not comparators:
            self.fail("a comparison ('<=', '<', '>=', '>' or '=')")
        return Comparison(tuple(operands), tuple(comparators))

    def arith(self) -> Arith:
        left = self.term()
        while self.token.kind in ("PLUS", "MINUS"):
            op = self.advance().text
            left = BinArith(op, left, self.term())
        return left

    def term(self) -> Arith:
        left = self.unary()
        while self.token.kind in ("STAR", "SLASH"):
            op = self.advance().text
            left = BinArith(op, left, self.unary())
        return left

    def unary(self) -> Arith:
        if self.accept("MINUS"):
            return Neg(self.unary())
        return self.arith_power()

    def arith_power(self) -> Arith:
        base = self.primary()
        if self.accept("CARET"):
            return BinArith("^", base, self.unary())
        return base

    def primary(self) -> Arith:
        tok = self.token
        if tok.kind == "NUMBER":
            self.advance()
            return Num(tok.value)
        if tok.kind == "NAME":
            self.advance()
            return DegreeVar(tok.text)
        if tok.kind in ("MIN", "MAX"):
            self.advance()
            self.expect("LPAREN", f"'(' after {tok.text}")
            args = [self.arith()]
            while self.accept("COMMA"):
                args.append(self.arith())
            self.expect("RPAREN", "')'")
            return Call(tok.text, tuple(args))
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.arith()
            self.expect("RPAREN", "')'")
            return inner
        self.fail("a number, a lowercase degree variable, min, max or '('")


def _tokens(source: Union[str, Sequence[Token]]) -> List[Token]:
    return tokenize(source) if isinstance(source, str) else list(source)


def parse_expr(source: Union[str, Sequence[Token]]) -> Expr:
    parser = Parser(_tokens(source))
    expr = parser.expr()
    parser.expect_end()
    return expr


def parse_statement(source: Union[str, Sequence[Token]]) -> RelationStatement:
    return Parser(_tokens(source)).statement()


def parse_scalar_statement(source: Union[str, Sequence[Token]]) -> ScalarStatement:
    return Parser(_tokens(source)).scalar_statement()


def parse_constraint(source: Union[str, Sequence[Token]]) -> ConstraintExpr:
    parser = Parser(_tokens(source))
    condition = parser.condition()
    parser.expect_end()
    return condition


def parse_constraints(source: Union[str, Sequence[Token]]) -> List[ConstraintExpr]:
    """A comma-separated list of conditions, as written after `given`."""
    parser = Parser(_tokens(source))
    items = parser.constraint_list()
    parser.expect_end()
    return items


# Free variables
def expr_variables(e: Expr) -> Iterator[str]:
    """Set variable names in order of first appearance (with repeats)."""
    if isinstance(e, Var):
        yield e.name
    elif isinstance(e, Binary):
        yield from expr_variables(e.left)
        yield from expr_variables(e.right)
    elif isinstance(e, (Scale, Multiple)):
        yield from expr_variables(e.inner)
    elif isinstance(e, Power):
        yield from expr_variables(e.base)


def arith_names(a: Arith) -> Iterator[str]:
    if isinstance(a, DegreeVar):
        yield a.name
    elif isinstance(a, Neg):
        yield from arith_names(a.operand)
    elif isinstance(a, BinArith):
        yield from arith_names(a.left)
        yield from arith_names(a.right)
    elif isinstance(a, Call):
        for arg in a.args:
            yield from arith_names(arg)


def constraint_names(c: ConstraintExpr) -> Iterator[str]:
    if isinstance(c, Comparison):
        for operand in c.operands:
            yield from arith_names(operand)
    else:
        for item in c.items:
            yield from constraint_names(item)


def _unique(names) -> list:
    return list(dict.fromkeys(names))


def build_statement(
    lhs: Expr,
    rhs: Expr,
    relation: Relation,
    constraints: Sequence[ConstraintExpr] = (),
    condition: Optional[ConstraintExpr] = None,
) -> RelationStatement:
    """Assemble a statement and collect its free variables in first-appearance order."""
    variables = _unique(list(expr_variables(lhs)) + list(expr_variables(rhs)))
    by_alias = {}
    for name in variables:
        alias = name.lower()
        if alias in by_alias and by_alias[alias] != name:
            raise ParseError(0, f"set variables with distinct lowercase aliases", f"{by_alias[alias]!r} and {name!r}")
        by_alias[alias] = name
    extra = list(constraints) + ([condition] if condition is not None else [])
    for alias in _unique(n for c in extra for n in constraint_names(c)):
        if alias not in by_alias:
            name = alias.upper()
            if name in (UNIVERSAL_NAME, EMPTY_NAME):
                raise ParseError(0, "a degree variable", f"{alias!r}, the alias of a reserved constant")
            by_alias[alias] = name
            variables.append(name)
    logger.debug("statement over %s with %d hypothesis(es)", variables, len(constraints))
    return RelationStatement(lhs, rhs, relation, tuple(variables), tuple(constraints), condition)


def with_constraints(s: RelationStatement, constraints: Sequence[ConstraintExpr]) -> RelationStatement:
    """Add hypotheses to a statement, e.g. from repeated `--given` flags."""
    return build_statement(s.lhs, s.rhs, s.relation, list(s.constraints) + list(constraints), s.equality_condition)


def with_equality_condition(s: RelationStatement, condition: Optional[ConstraintExpr]) -> RelationStatement:
    return build_statement(s.lhs, s.rhs, s.relation, s.constraints, condition)


# Evaluation
def eval_set(
    e: Expr,
    env: Dict[str, FuzzySet],
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
    universe: Optional[Universe] = None,
) -> FuzzySet:
    """Evaluate a set term; every node delegates to the set-level operations."""
    if isinstance(e, Var):
        if e.name not in env:
            raise UnboundVariable(e.name)
        return env[e.name]
    if isinstance(e, ConstUniversal):
        return universal_set(universe or universe_of(env.values()))
    if isinstance(e, ConstEmpty):
        return empty_set(universe or universe_of(env.values()))
    if isinstance(e, Binary):
        left = eval_set(e.left, env, quotient_mode, universe)
        right = eval_set(e.right, env, quotient_mode, universe)
        return apply_binary(e.op, left, right, quotient_mode)
    if isinstance(e, Scale):
        return scalar_multiply(e.kappa, eval_set(e.inner, env, quotient_mode, universe))
    if isinstance(e, Multiple):
        return multiple(e.n, eval_set(e.inner, env, quotient_mode, universe))
    if isinstance(e, Power):
        return power(eval_set(e.base, env, quotient_mode, universe), e.p)
    raise TypeError(f"not an expression node: {e!r}")


def compile_degree(
    e: Expr,
    variables: Sequence[str],
    quotient_mode: QuotientMode = QuotientMode.LIMIT,
) -> Callable[[tuple], float]:
    """
    Compile a set term into its degree kernel: a function of the tuple of
    degrees of `variables` (same order). Uses the same kernels as the
    set-level operations, so results agree exactly.
    """
    index = {name: i for i, name in enumerate(variables)}

    def build(node: Expr) -> Callable[[tuple], float]:
        if isinstance(node, Var):
            if node.name not in index:
                raise UnboundVariable(node.name)
            i = index[node.name]
            return lambda v: v[i]
        if isinstance(node, ConstUniversal):
            return lambda v: 1.0
        if isinstance(node, ConstEmpty):
            return lambda v: 0.0
        if isinstance(node, Binary):
            left, right = build(node.left), build(node.right)
            if node.op is BinaryOp.BOUNDED_QUOTIENT:
                return lambda v: bounded_quotient_kernel(left(v), right(v), quotient_mode)
            kernel = KERNELS[node.op].fn
            return lambda v: kernel(left(v), right(v))
        if isinstance(node, Scale):
            inner, scaled = build(node.inner), scale_degree_kernel(node.kappa).fn
            return lambda v: scaled(inner(v))
        if isinstance(node, Multiple):
            inner, n = build(node.inner), node.n
            return lambda v: multiple_kernel(n, inner(v))
        if isinstance(node, Power):
            base, raised = build(node.base), power_degree_kernel(node.p).fn
            return lambda v: raised(base(v))
        raise TypeError(f"not an expression node: {node!r}")

    return build(e)


def eval_degree(e: Expr, env: Dict[str, float], quotient_mode: QuotientMode = QuotientMode.LIMIT) -> float:
    names = list(env)
    return compile_degree(e, names, quotient_mode)(tuple(env[n] for n in names))


_ARITH_OPS = {
    "+": lambda x, y: x + y,
    "-": lambda x, y: x - y,
    "*": lambda x, y: x * y,
    "/": lambda x, y: x / y,
    "^": lambda x, y: x ** y,
}


def compile_arith(a: Arith, names: Sequence[str]) -> Callable[[tuple], float]:
    index = {name: i for i, name in enumerate(names)}

    def build(node: Arith) -> Callable[[tuple], float]:
        if isinstance(node, Num):
            value = node.value
            return lambda v: value
        if isinstance(node, DegreeVar):
            if node.name not in index:
                raise UnboundVariable(node.name)
            i = index[node.name]
            return lambda v: v[i]
        if isinstance(node, Neg):
            operand = build(node.operand)
            return lambda v: -operand(v)
        if isinstance(node, BinArith):
            left, right, fn = build(node.left), build(node.right), _ARITH_OPS[node.op]

            def apply(v: tuple) -> float:
                try:
                    result = fn(left(v), right(v))
                except (ZeroDivisionError, OverflowError) as exc:
                    raise ArithmeticDomainError(f"{format_arith(node)}: {exc}") from exc
                if isinstance(result, complex):
                    raise ArithmeticDomainError(f"{format_arith(node)}: negative base to a fractional power")
                return result

            return apply
        if isinstance(node, Call):
            args = [build(arg) for arg in node.args]
            pick = min if node.fn == "min" else max
            return lambda v: pick(arg(v) for arg in args)
        raise TypeError(f"not an arithmetic node: {node!r}")

    return build(a)


def compare(x: float, cmp: str, y: float, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Toleranced comparison: <=, >= and = get epsilon slack, < and > are exact."""
    eps = tol.epsilon
    if cmp == "<=":
        return x <= y + eps
    if cmp == ">=":
        return x + eps >= y
    if cmp == "=":
        return abs(x - y) <= eps
    if cmp == "<":
        return x < y
    if cmp == ">":
        return x > y
    raise ValueError(f"unknown comparator {cmp!r}")


def compile_constraint(
    c: ConstraintExpr,
    names: Sequence[str],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Callable[[tuple], bool]:
    if isinstance(c, Comparison):
        operands = [compile_arith(o, names) for o in c.operands]
        comparators = c.comparators

        def check(v: tuple) -> bool:
            values = [o(v) for o in operands]
            return all(compare(values[i], cmp, values[i + 1], tol) for i, cmp in enumerate(comparators))

        return check
    items = [compile_constraint(item, names, tol) for item in c.items]
    if c.op == "and":
        return lambda v: all(item(v) for item in items)
    return lambda v: any(item(v) for item in items)


def eval_constraint(c: ConstraintExpr, env: Dict[str, float], tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    names = list(env)
    return compile_constraint(c, names, tol)(tuple(env[n] for n in names))


def eval_arith(a: Arith, env: Dict[str, float]) -> float:
    names = list(env)
    return compile_arith(a, names)(tuple(env[n] for n in names))


# Pretty-printing
def format_number(value: float) -> str:
    value = float(value)
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _level(e: Expr) -> int:
    if isinstance(e, Binary):
        return 1 if e.op in _ADDITIVE else 2
    if isinstance(e, (Scale, Multiple)):
        return 3
    if isinstance(e, Power):
        return 4
    return 5


def _wrap(e: Expr, minimum: int) -> str:
    text = format_expr(e)
    return f"({text})" if _level(e) < minimum else text


def format_expr(e: Expr) -> str:
    """Canonical text; parse_expr(format_expr(e)) == e."""
    if isinstance(e, Var):
        return e.name
    if isinstance(e, ConstUniversal):
        return UNIVERSAL_NAME
    if isinstance(e, ConstEmpty):
        return EMPTY_NAME
    if isinstance(e, Binary):
        if e.op in _ADDITIVE:
            return f"{_wrap(e.left, 1)} {SYMBOLS[e.op]} {_wrap(e.right, 2)}"
        return f"{_wrap(e.left, 2)} {SYMBOLS[e.op]} {_wrap(e.right, 3)}"
    if isinstance(e, Scale):
        return f"{format_number(e.kappa)} * {_wrap(e.inner, 3)}"
    if isinstance(e, Multiple):
        return f"{e.n} * {_wrap(e.inner, 3)}"
    if isinstance(e, Power):
        return f"{_wrap(e.base, 5)}^{format_number(e.p)}"
    raise TypeError(f"not an expression node: {e!r}")


_ARITH_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


def _arith_level(a: Arith) -> int:
    if isinstance(a, BinArith):
        return _ARITH_LEVEL[a.op]
    if isinstance(a, Neg):
        return 3
    return 5


def format_arith(a: Arith) -> str:
    def wrap(node: Arith, minimum: int) -> str:
        text = format_arith(node)
        return f"({text})" if _arith_level(node) < minimum else text

    if isinstance(a, Num):
        return format_number(a.value)
    if isinstance(a, DegreeVar):
        return a.name
    if isinstance(a, Neg):
        return f"-{wrap(a.operand, 3)}"
    if isinstance(a, Call):
        return f"{a.fn}({', '.join(format_arith(arg) for arg in a.args)})"
    level = _ARITH_LEVEL[a.op]
    if a.op == "^":
        return f"{wrap(a.left, 5)}^{wrap(a.right, 3)}"
    return f"{wrap(a.left, level)} {a.op} {wrap(a.right, level + 1)}"


def format_constraint(c: ConstraintExpr) -> str:
    if isinstance(c, Comparison):
        parts = [format_arith(c.operands[0])]
        for cmp, operand in zip(c.comparators, c.operands[1:]):
            parts.append(f"{cmp} {format_arith(operand)}")
        return " ".join(parts)
    return f" {c.op} ".join(format_constraint(item) for item in c.items)


def format_statement(s: RelationStatement) -> str:
    text = f"{format_expr(s.lhs)} {s.relation.value} {format_expr(s.rhs)}"
    if s.constraints:
        text += " given " + ", ".join(format_constraint(c) for c in s.constraints)
    if s.equality_condition is not None:
        text += " equality_iff " + format_constraint(s.equality_condition)
    return text

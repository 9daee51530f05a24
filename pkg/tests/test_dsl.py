import random

import pytest
from hypothesis import given, strategies as st

from fuzzyrel.dsl import (
    Binary,
    ConstEmpty,
    ConstUniversal,
    Multiple,
    Power,
    Relation,
    Scale,
    Var,
    compile_degree,
    eval_arith,
    eval_constraint,
    eval_degree,
    eval_set,
    format_expr,
    parse_constraint,
    parse_constraints,
    parse_expr,
    parse_scalar_statement,
    parse_statement,
    tokenize,
)
from fuzzyrel.errors import ArithmeticDomainError, EmptyDivisor, LexError, ParseError, UnboundVariable
from fuzzyrel.ops import BinaryOp, QuotientMode
from fuzzyrel.verifier import random_expr

A, B, C, D = Var("A"), Var("B"), Var("C"), Var("D")


def kinds(source):
    return [t.kind for t in tokenize(source)]


def test_tokenize_operators():
    assert kinds("A[+]B .* C") == ["VAR", "BSUM", "VAR", "ALG_PROD", "VAR", "EOF"]
    assert kinds("A [-] B [/] C [*] D .+ E") == [
        "VAR", "BDIFF", "VAR", "BQUOT", "VAR", "BPROD", "VAR", "ALG_SUM", "VAR", "EOF",
    ]
    assert kinds("a <= b == c >= d < e > f = g") == [
        "NAME", "LE", "NAME", "EQEQ", "NAME", "GE", "NAME", "LT", "NAME", "GT", "NAME", "EQ", "NAME", "EOF",
    ]
    assert kinds("given and or min max equality_iff") == ["GIVEN", "AND", "OR", "MIN", "MAX", "EQUALITY_IFF", "EOF"]


def test_tokenize_numbers():
    tokens = tokenize("0.25 * A^2")
    assert tokens[0].value == 0.25
    assert tokens[-2].value == 2.0
    assert tokenize("1e-05")[0].value == 1e-05


@pytest.mark.parametrize(
    "source, position",
    [("A [?] B", 2), ("A @ B", 2), ("0.5x * A", 0), ("A ^ 1.2.3", 4), ("1e400 * A", 0), ("A ^ 1e400", 4)],
)
def test_lex_errors(source, position):
    with pytest.raises(LexError) as exc:
        tokenize(source)
    assert exc.value.position == position


@pytest.mark.parametrize(
    "source, expected",
    [
        ("A | B & C", Binary(BinaryOp.UNION, A, Binary(BinaryOp.INTERSECTION, B, C))),
        ("A [+] B [-] C", Binary(BinaryOp.BOUNDED_DIFFERENCE, Binary(BinaryOp.BOUNDED_SUM, A, B), C)),
        ("A .* B [/] C", Binary(BinaryOp.BOUNDED_QUOTIENT, Binary(BinaryOp.ALGEBRAIC_PRODUCT, A, B), C)),
        ("0.5 * A .* B", Binary(BinaryOp.ALGEBRAIC_PRODUCT, Scale(0.5, A), B)),
        ("A^2 .* B", Binary(BinaryOp.ALGEBRAIC_PRODUCT, Power(A, 2.0), B)),
        ("(A[+]B)/2", Scale(0.5, Binary(BinaryOp.BOUNDED_SUM, A, B))),
        ("A .+ B .* C", Binary(BinaryOp.ALGEBRAIC_SUM, A, Binary(BinaryOp.ALGEBRAIC_PRODUCT, B, C))),
        ("A [-] B [-] C", Binary(BinaryOp.BOUNDED_DIFFERENCE, Binary(BinaryOp.BOUNDED_DIFFERENCE, A, B), C)),
        (
            "A .* C [+] B .* D",
            Binary(BinaryOp.BOUNDED_SUM, Binary(BinaryOp.ALGEBRAIC_PRODUCT, A, C), Binary(BinaryOp.ALGEBRAIC_PRODUCT, B, D)),
        ),
        ("(A[+]B)^0.5 / 2", Scale(0.5, Power(Binary(BinaryOp.BOUNDED_SUM, A, B), 0.5))),
    ],
)
def test_precedence(source, expected):
    assert parse_expr(source) == expected


def test_constants_and_multiples():
    assert parse_expr("X & O") == Binary(BinaryOp.INTERSECTION, ConstUniversal(), ConstEmpty())
    assert parse_expr("3 * A") == Multiple(3, A)
    assert parse_expr("1 * A") == Scale(1.0, A)


@pytest.mark.parametrize("source", ["1.5 * A", "A / 0.5", "A >=", "(A | B", "A B", "A ^ B", ""])
def test_parse_errors(source):
    with pytest.raises(ParseError):
        parse_expr(source)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_statement("A >=")
    assert exc.value.position == 4
    assert exc.value.found == "end of input"


def test_statement_with_hypotheses():
    s = parse_statement("0.5*(A[+]B) >= (A.*B)^0.5 given a*b <= 0.25 equality_iff a = b")
    assert s.relation is Relation.SUPERSET
    assert s.variables == ("A", "B")
    assert s.aliases == ("a", "b")
    assert len(s.constraints) == 1
    assert s.text() == "0.5 * (A [+] B) >= (A .* B)^0.5 given a * b <= 0.25 equality_iff a = b"
    assert parse_statement(s.text()) == s


def test_constraint_only_variables_are_added():
    s = parse_statement("A <= A | B given c <= 0.5")
    assert s.variables == ("A", "B", "C")


def test_reserved_alias_rejected():
    with pytest.raises(ParseError):
        parse_statement("A <= X given x <= 1")


def test_comma_and_repeated_given_agree():
    joined = parse_constraints("a <= 0.5, b <= 0.5")
    assert joined == [parse_constraint("a <= 0.5"), parse_constraint("b <= 0.5")]


def test_constraints():
    env = {"a": 0.5, "b": 0.5}
    assert eval_constraint(parse_constraint("a + b <= 1"), env)
    assert eval_constraint(parse_constraint("0 <= a <= b <= 1"), env)
    assert eval_constraint(parse_constraint("min(a, b) = 0.5 and max(a, 1) = 1"), env)
    assert eval_constraint(parse_constraint("a = 1 or b = 0.5"), env)
    assert not eval_constraint(parse_constraint("0 < a - b"), env)
    # strict comparisons get no epsilon slack
    assert not eval_constraint(parse_constraint("0 < a + b"), {"a": 0.0, "b": 0.0})
    assert eval_constraint(parse_constraint("a <= b"), {"a": 0.5 + 1e-12, "b": 0.5})
    assert eval_arith(parse_constraint("-a^2 + 1/4 <= 0").operands[0], {"a": 0.5}) == 0.0


def test_arithmetic_domain_errors():
    with pytest.raises(ArithmeticDomainError):
        eval_constraint(parse_constraint("a / b <= 1"), {"a": 0.5, "b": 0.0})
    with pytest.raises(ArithmeticDomainError):
        eval_constraint(parse_constraint("(-a)^0.5 <= 1"), {"a": 0.25})


def test_scalar_statement_chain():
    s = parse_scalar_statement("(alpha + beta)^2 <= 4 * max(alpha^2, beta^2) <= 4 * (alpha^2 + beta^2)")
    assert s.names == ("alpha", "beta")
    assert s.relation.comparators == ("<=", "<=")


def test_eval_set(sample_sets):
    result = eval_set(parse_expr("A [+] B"), sample_sets)
    assert result.degrees == pytest.approx((0.7, 1.0))
    assert eval_set(parse_expr("A | X"), sample_sets).degrees == (1.0, 1.0)
    assert eval_set(parse_expr("A / 2"), sample_sets).degrees == pytest.approx((0.1, 0.35))
    with pytest.raises(UnboundVariable) as exc:
        eval_set(parse_expr("C"), sample_sets)
    assert isinstance(exc.value, KeyError)
    with pytest.raises(EmptyDivisor):
        eval_set(parse_expr("A [/] O"), sample_sets, QuotientMode.STRICT)


def test_eval_degree():
    assert eval_degree(parse_expr("A [+] B"), {"A": 0.25, "B": 0.5}) == 0.75
    assert eval_degree(parse_expr("A [/] B"), {"A": 0.25, "B": 0.0}) == 1.0
    assert compile_degree(parse_expr("(A[-]B)[+](B[-]A)"), ("A", "B"))((1.0, 0.0)) == 1.0


def test_format_goldens():
    assert format_expr(parse_expr("(A|B)&C")) == "(A | B) & C"
    assert format_expr(parse_expr("A.*(B.*C)")) == "A .* (B .* C)"
    assert format_expr(parse_expr("(0.5*A)^2")) == "(0.5 * A)^2"
    assert format_expr(parse_expr("(A^2)^3")) == "(A^2)^3"
    assert format_expr(parse_expr("A[-](B[-]C)")) == "A [-] (B [-] C)"


def test_round_trip_generated_terms():
    rng = random.Random(2024)
    for _ in range(10_000):
        e = random_expr(rng, ("A", "B", "C"), depth=4)
        assert parse_expr(format_expr(e)) == e


leaves = st.sampled_from([A, B, C, ConstUniversal(), ConstEmpty()])


def _extend(children):
    return st.one_of(
        st.builds(Binary, st.sampled_from(list(BinaryOp)), children, children),
        st.builds(Scale, st.floats(min_value=0.0, max_value=1.0), children),
        st.builds(Multiple, st.integers(min_value=2, max_value=9), children),
        st.builds(Power, children, st.floats(min_value=0.0, max_value=10.0)),
    )


terms = st.recursive(leaves, _extend, max_leaves=12)


@given(terms)
def test_round_trip_property(e):
    assert parse_expr(format_expr(e)) == e

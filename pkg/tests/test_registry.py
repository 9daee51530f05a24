import json

import pytest

from fuzzyrel import registry
from fuzzyrel.dsl import Binary, Multiple, Power, Relation, Scale, Var
from fuzzyrel.errors import ParameterOutOfRange, UnknownTheorem
from fuzzyrel.ops import BinaryOp
from fuzzyrel.registry import ScalarLemma, TheoremEntry

THEOREM_IDS = [
    "T1", "T2a", "T2b", "T3a", "T3b", "T3c", "T3d", "T4", "T5", "T6", "T6d",
    "T7", "T8", "T9", "T9r", "T10", "T11", "T12", "P1", "C1a", "C1b",
]
LEMMA_IDS = ["L1", "L2", "S1", "S2", "S3", "S4", "S5", "S6"]


def test_catalog_order():
    assert [t.id for t in registry.list_theorems()] == THEOREM_IDS
    assert [lemma.id for lemma in registry.list_lemmas()] == LEMMA_IDS


@pytest.mark.parametrize("entry", registry.list_theorems(), ids=lambda e: e.id)
def test_every_theorem_parses_over_its_sweep(entry):
    for params in entry.parameter_sets():
        statement = registry.instantiate(entry, params)
        assert statement.arity <= 4
        assert (statement.equality_condition is None) == (entry.equality_iff is None)


@pytest.mark.parametrize("lemma", registry.list_lemmas(), ids=lambda lemma: lemma.id)
def test_every_lemma_parses_over_its_sweep(lemma):
    for params in lemma.parameter_sets():
        statement = lemma.instantiate(params)
        assert 2 <= statement.arity <= 4


def test_lookup():
    assert isinstance(registry.get_entry("T2a"), TheoremEntry)
    assert isinstance(registry.get_entry("S3"), ScalarLemma)
    with pytest.raises(UnknownTheorem):
        registry.get_entry("T99")
    with pytest.raises(UnknownTheorem):
        registry.get_theorem("L1")


def test_equality_claim_kinds():
    assert registry.get_theorem("T2a").equality_claim_kind == registry.IFF_CLAIMED
    assert registry.get_theorem("T9").equality_claim_kind == registry.SUFFICIENCY_ONLY
    assert not registry.get_theorem("T11").has_equality_claim
    assert registry.get_theorem("T11").strict
    assert registry.get_theorem("P1").category == registry.EXISTENCE


def test_instantiate_bernoulli():
    entry = registry.get_theorem("T10")
    assert entry.statement_text({"m": 3}).startswith("(A[+]B)^3 >= A^3 [+] 3*(A^2 .* B)")
    statement = registry.instantiate(entry, {"m": 3})
    assert statement.relation is Relation.SUPERSET
    assert statement.rhs == Binary(
        BinaryOp.BOUNDED_SUM,
        Power(Var("A"), 3.0),
        Multiple(3, Binary(BinaryOp.ALGEBRAIC_PRODUCT, Power(Var("A"), 2.0), Var("B"))),
    )
    assert "1 / 3" in statement.text()


def test_instantiate_power_mean_placeholder():
    entry = registry.get_theorem("T12")
    assert entry.statement_text({"p": 0.5}).startswith("(A[+]B)^0.5 / 1.4142135623730951 <= ")
    statement = registry.instantiate(entry, {"p": 0.5})
    # the divisor sugar becomes a scaling factor
    assert statement.lhs == Scale(1.0 / 2.0 ** 0.5, Power(Binary(BinaryOp.BOUNDED_SUM, Var("A"), Var("B")), 0.5))


@pytest.mark.parametrize(
    "entry_id, params",
    [
        ("T10", {"m": 0}),
        ("T10", {"m": 9}),
        ("T10", {"m": 2.5}),
        ("T10", {}),
        ("T12", {"p": 1}),
        ("T4", {"p": -0.5}),
        ("T2a", {"p": 1}),
        ("L2", {}),
    ],
)
def test_parameter_out_of_range(entry_id, params):
    with pytest.raises(ParameterOutOfRange):
        registry.get_entry(entry_id).statement_text(params)


def test_int_parameters_stay_int():
    assert registry.get_theorem("T10").checked_parameters({"m": 4.0}) == {"m": 4}
    assert isinstance(registry.get_theorem("T10").checked_parameters({"m": "4"})["m"], int)


def test_sweeps():
    assert len(registry.get_theorem("T10").parameter_sets()) == 8
    assert registry.get_theorem("T12").parameter_sets()[-1] == {"p": 0.99}
    assert registry.get_theorem("T2a").parameter_sets() == [{}]


def test_export_catalog():
    records = registry.export_catalog()
    assert len(records) == 29
    assert [r["id"] for r in records] == THEOREM_IDS + LEMMA_IDS
    assert records[-1]["category"] == "scalar"
    json.dumps(records)


def test_duplicate_ids_rejected():
    doc = {"theorems": [{"id": "T1", "title": "a", "dsl": "A <= A"}, {"id": "T1", "title": "b", "dsl": "A <= A"}]}
    with pytest.raises(ValueError, match="duplicate"):
        registry.parse_catalog(json.dumps(doc))

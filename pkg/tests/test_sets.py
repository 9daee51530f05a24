import json
import logging
import math

import pytest

from fuzzyrel.errors import (
    DegreeOutOfRange,
    DuplicateElement,
    LengthMismatch,
    SetsFileError,
    ToleranceOutOfRange,
    UniverseMismatch,
)
from fuzzyrel.sets import (
    Tolerance,
    Universe,
    empty_set,
    equals,
    is_included_in,
    load_sets,
    make_fuzzy_set,
    sets_from_dict,
    universal_set,
)


def test_make_fuzzy_set_keeps_universe_order(universe):
    s = make_fuzzy_set(universe, [0.25, 1])
    assert s.degrees == (0.25, 1.0)
    assert s.degree_at("x2") == 1.0
    assert s.as_dict() == {"x1": 0.25, "x2": 1.0}


def test_length_mismatch(universe):
    with pytest.raises(LengthMismatch):
        make_fuzzy_set(universe, [0.1, 0.2, 0.3])


@pytest.mark.parametrize("bad", [-0.01, 1.2, math.nan, math.inf, "high", True])
def test_degree_out_of_range(universe, bad):
    with pytest.raises(DegreeOutOfRange) as exc:
        make_fuzzy_set(universe, [0.5, bad])
    assert exc.value.index == 1


def test_duplicate_element():
    with pytest.raises(DuplicateElement):
        Universe.of("x1", "x1")


def test_universal_and_empty(universe):
    assert universal_set(universe).degrees == (1.0, 1.0)
    assert empty_set(universe).degrees == (0.0, 0.0)


def test_tolerance_range():
    assert Tolerance(0).epsilon == 0
    with pytest.raises(ToleranceOutOfRange):
        Tolerance(1e-3)
    with pytest.raises(ToleranceOutOfRange):
        Tolerance(-1e-12)


def test_inclusion_uses_epsilon(universe):
    a = make_fuzzy_set(universe, [0.3, 0.5])
    b = make_fuzzy_set(universe, [0.3 - 1e-10, 0.5])
    assert is_included_in(a, b)
    assert not is_included_in(a, b, Tolerance(0))
    assert is_included_in(b, a, Tolerance(0))


def test_equality_is_symmetric(universe):
    a = make_fuzzy_set(universe, [0.3, 0.5])
    b = make_fuzzy_set(universe, [0.3 + 5e-10, 0.5])
    assert equals(a, b) and equals(b, a)
    assert not equals(a, b, Tolerance(1e-12))


def test_universe_mismatch(universe):
    a = make_fuzzy_set(universe, [0.3, 0.5])
    b = make_fuzzy_set(Universe.of("y1", "y2"), [0.3, 0.5])
    with pytest.raises(UniverseMismatch):
        is_included_in(a, b)


def test_sets_from_dict():
    universe, sets = sets_from_dict({"universe": ["u", "v"], "sets": {"A": {"v": 1, "u": 0.5}}})
    assert universe.elements == ("u", "v")
    assert sets["A"].degrees == (0.5, 1.0)


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"universe": ["u"]},
        {"universe": "u", "sets": {}},
        {"universe": ["u", "v"], "sets": {"A": {"u": 0.5}}},
        {"universe": ["u"], "sets": {"A": {"u": 0.5, "w": 0.1}}},
        {"universe": ["u"], "sets": {"A": {"u": 2}}},
        {"universe": ["u"], "sets": {"A": [0.5]}},
    ],
)
def test_sets_from_dict_rejects(doc):
    with pytest.raises(SetsFileError):
        sets_from_dict(doc)


def test_reserved_names_warn(caplog):
    with caplog.at_level(logging.WARNING, logger="fuzzyrel.sets"):
        sets_from_dict({"universe": ["u"], "sets": {"X": {"u": 0.5}}})
    assert "reserved" in caplog.text


def test_load_sets(sets_file):
    universe, sets = load_sets(sets_file)
    assert list(universe) == ["x1", "x2"]
    assert sorted(sets) == ["A", "B", "Z"]


def test_load_sets_errors(tmp_path):
    with pytest.raises(SetsFileError):
        load_sets(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(SetsFileError):
        load_sets(broken)
    ok = tmp_path / "ok.json"
    ok.write_text(json.dumps({"universe": [], "sets": {}}), encoding="utf-8")
    universe, sets = load_sets(ok)
    assert len(universe) == 0 and sets == {}

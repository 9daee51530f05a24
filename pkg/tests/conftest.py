import json

import pytest

from fuzzyrel.sets import Universe, make_fuzzy_set

SETS_DOC = {
    "universe": ["x1", "x2"],
    "sets": {
        "A": {"x1": 0.2, "x2": 0.7},
        "B": {"x1": 0.5, "x2": 0.5},
        "Z": {"x1": 0.0, "x2": 0.0},
    },
}


@pytest.fixture(autouse=True)
def _no_worker_override(monkeypatch):
    monkeypatch.delenv("FUZZYREL_WORKERS", raising=False)


@pytest.fixture
def universe():
    return Universe.of("x1", "x2")


@pytest.fixture
def sample_sets(universe):
    return {
        "A": make_fuzzy_set(universe, [0.2, 0.7]),
        "B": make_fuzzy_set(universe, [0.5, 0.5]),
    }


@pytest.fixture
def sets_file(tmp_path):
    path = tmp_path / "sets.json"
    path.write_text(json.dumps(SETS_DOC), encoding="utf-8")
    return path

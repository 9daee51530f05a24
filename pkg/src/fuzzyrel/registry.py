"""
The theorem catalog: every inclusion relation, the non-emptiness
proposition, the corollary chain and the scalar lemmas behind them, stored as
DSL text in the package data file catalog/theorems.json.

Parameterized entries use `{p}`, `{m}`, `{m_minus_1}` and `{two_to_p}`
placeholders that `instantiate` fills with literal numbers.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Union

from . import resources
from .dsl import RelationStatement, ScalarStatement, format_number, parse_scalar_statement, parse_statement
from .errors import ParameterOutOfRange, UnknownTheorem

logger = logging.getLogger(__name__)

IFF_CLAIMED = "iff-claimed"
SUFFICIENCY_ONLY = "sufficiency-only"
INCLUSION = "inclusion"
EXISTENCE = "existence"


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    type: str = "float"
    minimum: float = 0.0
    maximum: Optional[float] = None
    maximum_inclusive: bool = True
    sweep: tuple = ()

    def admissible(self) -> str:
        if self.maximum is None:
            upper = "inf)"
        else:
            upper = f"{format_number(self.maximum)}{']' if self.maximum_inclusive else ')'}"
        kind = "integers in " if self.type == "int" else ""
        return f"{kind}[{format_number(self.minimum)}, {upper}"

    def check(self, value) -> Union[int, float]:
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise ParameterOutOfRange(self.name, value, self.admissible()) from None
        if self.type == "int":
            if number != int(number):
                raise ParameterOutOfRange(self.name, value, self.admissible())
            number = int(number)
        too_high = self.maximum is not None and (
            number > self.maximum or (number == self.maximum and not self.maximum_inclusive)
        )
        if number < self.minimum or too_high:
            raise ParameterOutOfRange(self.name, value, self.admissible())
        return number

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterSpec":
        return cls(
            name=data["name"],
            type=data.get("type", "float"),
            minimum=data.get("min", 0.0),
            maximum=data.get("max"),
            maximum_inclusive=data.get("max_inclusive", True),
            sweep=tuple(data.get("sweep", ())),
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "type": self.type,
            "min": self.minimum,
            "max": self.maximum,
            "max_inclusive": self.maximum_inclusive,
            "sweep": list(self.sweep),
        }


def _placeholders(params: Dict[str, Union[int, float]]) -> Dict[str, str]:
    values = {name: format_number(value) for name, value in params.items()}
    if "m" in params:
        values["m_minus_1"] = format_number(params["m"] - 1)
    if "p" in params:
        values["two_to_p"] = format_number(2.0 ** params["p"])
    return values


def _check_params(entry_id: str, specs: tuple, params: Optional[Dict]) -> Dict[str, Union[int, float]]:
    params = dict(params or {})
    known = {spec.name: spec for spec in specs}
    for name in params:
        if name not in known:
            raise ParameterOutOfRange(name, params[name], f"none ({entry_id} takes no parameter {name!r})")
    checked = {}
    for spec in specs:
        if spec.name not in params:
            raise ParameterOutOfRange(spec.name, None, spec.admissible())
        checked[spec.name] = spec.check(params[spec.name])
    return checked


def _sweep(specs: tuple) -> Iterator[Dict[str, Union[int, float]]]:
    if not specs:
        yield {}
        return
    head, rest = specs[0], specs[1:]
    for value in head.sweep:
        for tail in _sweep(rest):
            yield {head.name: head.check(value), **tail}


@dataclass(frozen=True)
class TheoremEntry:
    id: str
    title: str
    reference: str
    category: str
    dsl: str
    given: tuple = ()
    equality_iff: Optional[str] = None
    equality_claim_kind: Optional[str] = None
    strict: bool = False
    parameters: tuple = ()
    notes: str = ""

    def checked_parameters(self, params: Optional[Dict] = None) -> Dict[str, Union[int, float]]:
        """Validate `params` against the entry's parameter specs (ints stay ints)."""
        return _check_params(self.id, self.parameters, params)

    def statement_text(self, params: Optional[Dict] = None) -> str:
        values = _placeholders(_check_params(self.id, self.parameters, params))
        text = self.dsl.format(**values)
        if self.given:
            text += " given " + ", ".join(g.format(**values) for g in self.given)
        if self.equality_iff:
            text += " equality_iff " + self.equality_iff.format(**values)
        return text

    def parameter_sets(self) -> List[Dict[str, Union[int, float]]]:
        """The default sweep; a single empty dict for unparameterized entries."""
        return list(_sweep(self.parameters))

    @property
    def has_equality_claim(self) -> bool:
        return self.equality_iff is not None

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremEntry":
        return cls(
            id=data["id"],
            title=data["title"],
            reference=data.get("reference", ""),
            category=data.get("category", INCLUSION),
            dsl=data["dsl"],
            given=tuple(data.get("given", ())),
            equality_iff=data.get("equality_iff"),
            equality_claim_kind=data.get("kind"),
            strict=data.get("strict", False),
            parameters=tuple(ParameterSpec.from_dict(p) for p in data.get("parameters", ())),
            notes=data.get("notes", ""),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "category": self.category,
            "dsl": self.dsl,
            "given": list(self.given),
            "equality_iff": self.equality_iff,
            "kind": self.equality_claim_kind,
            "strict": self.strict,
            "reference": self.reference,
            "parameters": [p.to_dict() for p in self.parameters],
            "notes": self.notes,
        }


@dataclass(frozen=True)
class ScalarLemma:
    id: str
    title: str
    reference: str
    relation: str
    given: tuple = ()
    equality_iff: Optional[str] = None
    domain: tuple = (0.0, 1.0)
    parameters: tuple = ()

    def checked_parameters(self, params: Optional[Dict] = None) -> Dict[str, Union[int, float]]:
        return _check_params(self.id, self.parameters, params)

    def statement_text(self, params: Optional[Dict] = None) -> str:
        values = _placeholders(_check_params(self.id, self.parameters, params))
        text = self.relation.format(**values)
        if self.given:
            text += " given " + ", ".join(g.format(**values) for g in self.given)
        if self.equality_iff:
            text += " equality_iff " + self.equality_iff.format(**values)
        return text

    def instantiate(self, params: Optional[Dict] = None) -> ScalarStatement:
        return parse_scalar_statement(self.statement_text(params))

    def parameter_sets(self) -> List[Dict[str, Union[int, float]]]:
        return list(_sweep(self.parameters))

    @classmethod
    def from_dict(cls, data: dict) -> "ScalarLemma":
        low, high = data.get("domain", (0.0, 1.0))
        return cls(
            id=data["id"],
            title=data["title"],
            reference=data.get("reference", ""),
            relation=data["relation"],
            given=tuple(data.get("given", ())),
            equality_iff=data.get("equality_iff"),
            domain=(float(low), float(high)),
            parameters=tuple(ParameterSpec.from_dict(p) for p in data.get("parameters", ())),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "category": "scalar",
            "relation": self.relation,
            "given": list(self.given),
            "equality_iff": self.equality_iff,
            "reference": self.reference,
            "domain": list(self.domain),
            "parameters": [p.to_dict() for p in self.parameters],
        }


@dataclass(frozen=True)
class Catalog:
    theorems: tuple = ()
    lemmas: tuple = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for item in self.theorems + self.lemmas:
            if item.id in self._index:
                raise ValueError(f"duplicate catalog id {item.id!r}")
            self._index[item.id] = item

    def get(self, entry_id: str) -> Union[TheoremEntry, ScalarLemma]:
        try:
            return self._index[entry_id]
        except KeyError:
            raise UnknownTheorem(entry_id) from None


def parse_catalog(text: str) -> Catalog:
    data = json.loads(text)
    theorems = tuple(TheoremEntry.from_dict(d) for d in data.get("theorems", ()))
    lemmas = tuple(ScalarLemma.from_dict(d) for d in data.get("lemmas", ()))
    logger.debug("catalog: %d theorem entries, %d scalar lemmas", len(theorems), len(lemmas))
    return Catalog(theorems, lemmas)


@lru_cache(None)
def load_catalog() -> Catalog:
    return parse_catalog(resources.read_catalog_text())


def list_theorems() -> List[TheoremEntry]:
    return list(load_catalog().theorems)


def list_lemmas() -> List[ScalarLemma]:
    return list(load_catalog().lemmas)


def get_entry(entry_id: str) -> Union[TheoremEntry, ScalarLemma]:
    return load_catalog().get(entry_id)


def get_theorem(entry_id: str) -> TheoremEntry:
    entry = get_entry(entry_id)
    if not isinstance(entry, TheoremEntry):
        raise UnknownTheorem(entry_id)
    return entry


def instantiate(entry: TheoremEntry, params: Optional[Dict] = None) -> RelationStatement:
    """Substitute literal parameters into the entry's template and parse it."""
    return parse_statement(entry.statement_text(params))


def export_catalog() -> List[dict]:
    catalog = load_catalog()
    return [item.to_dict() for item in catalog.theorems + catalog.lemmas]

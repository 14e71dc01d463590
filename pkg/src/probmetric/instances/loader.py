"""
Instance files — load, validate and print instance bundles.

An instance file is a JSON document:

    {
      "space": {"points": ["a", "b"], "dist": [["0", "1"], ["1", "0"]]},
      "laws": {"P": ["1/2", "1/2"]},
      "random_variables": {"xi": [["0", "1/2", "a"], ["1/2", "1", "b"]]},
      "sequences": {"s": {"prefix": [], "cycle": ["xi"]}},
      "seed": 7,
      "provenance": "generated seed=7 profile=small"
    }

Rationals are "p/q" strings. Printing is canonical (sorted names, sorted
pieces, reduced fractions), so parse followed by print is the identity on
printed documents.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from ..errors import InstanceFormatError, ProbMetricError
from ..gauges.gauge import SequenceSpec
from ..models import FinMetricSpace, Law, RandomVariable, format_fraction, make_space

logger = logging.getLogger(__name__)

Rational = Union[str, int]


def _check_rational(value: Rational) -> Rational:
    try:
        Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{value}' is not a rational") from None
    return value


class SpaceModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    points: list[str]
    dist: list[list[Rational]]

    @field_validator("dist")
    @classmethod
    def _rationals(cls, rows: list[list[Rational]]) -> list[list[Rational]]:
        for row in rows:
            for v in row:
                _check_rational(v)
        return rows


class SequenceModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    prefix: list[str] = []
    cycle: list[str]


class InstanceDocument(BaseModel):
    """Schema of an instance file."""

    model_config = ConfigDict(extra="forbid")

    space: SpaceModel
    laws: dict[str, list[Rational]] = {}
    random_variables: dict[str, list[tuple[Rational, Rational, str]]] = {}
    sequences: dict[str, SequenceModel] = {}
    seed: Optional[int] = None
    provenance: str = ""

    @field_validator("laws")
    @classmethod
    def _law_rationals(cls, laws: dict[str, list[Rational]]) -> dict[str, list[Rational]]:
        for weights in laws.values():
            for w in weights:
                _check_rational(w)
        return laws

    @field_validator("random_variables")
    @classmethod
    def _endpoint_rationals(
        cls, rvs: dict[str, list[tuple[Rational, Rational, str]]]
    ) -> dict[str, list[tuple[Rational, Rational, str]]]:
        for triples in rvs.values():
            for a, b, _ in triples:
                _check_rational(a)
                _check_rational(b)
        return rvs


@dataclass(frozen=True)
class SequenceRef:
    """A sequence given by the names of its random variables."""

    prefix: tuple[str, ...]
    cycle: tuple[str, ...]


@dataclass
class InstanceBundle:
    """
    A validated instance: one space with named laws, random variables and sequences.

    Attributes:
        space: The finite metric space.
        laws: Laws by name.
        rvs: Random variables by name.
        sequences: Sequences by name, as references to `rvs`.
        seed: Generator seed, when generated.
        provenance: Free-form origin note.
    """

    space: FinMetricSpace
    laws: dict[str, Law] = field(default_factory=dict)
    rvs: dict[str, RandomVariable] = field(default_factory=dict)
    sequences: dict[str, SequenceRef] = field(default_factory=dict)
    seed: Optional[int] = None
    provenance: str = ""

    def law(self, name: str) -> Law:
        try:
            return self.laws[name]
        except KeyError:
            raise InstanceFormatError(f"no law named '{name}'") from None

    def rv(self, name: str) -> RandomVariable:
        try:
            return self.rvs[name]
        except KeyError:
            raise InstanceFormatError(f"no random variable named '{name}'") from None

    def sequence(self, name: str) -> SequenceSpec:
        try:
            ref = self.sequences[name]
        except KeyError:
            raise InstanceFormatError(f"no sequence named '{name}'") from None
        return SequenceSpec.of(
            [self.rv(n) for n in ref.cycle], prefix=[self.rv(n) for n in ref.prefix]
        )

    def law_list(self) -> list[Law]:
        return [self.laws[k] for k in sorted(self.laws)]

    def rv_list(self) -> list[RandomVariable]:
        return [self.rvs[k] for k in sorted(self.rvs)]

    def sequence_list(self) -> list[SequenceSpec]:
        return [self.sequence(k) for k in sorted(self.sequences)]

    def to_dict(self) -> dict:
        data: dict = {
            "space": self.space.to_dict(),
            "laws": {
                name: [format_fraction(w) for w in self.laws[name].weights]
                for name in sorted(self.laws)
            },
            "random_variables": {
                name: self.rvs[name].to_triples() for name in sorted(self.rvs)
            },
            "sequences": {
                name: {
                    "prefix": list(self.sequences[name].prefix),
                    "cycle": list(self.sequences[name].cycle),
                }
                for name in sorted(self.sequences)
            },
            "provenance": self.provenance,
        }
        if self.seed is not None:
            data["seed"] = self.seed
        return data


def bundle_from_document(doc: InstanceDocument) -> InstanceBundle:
    """
    Build and validate every member of a parsed document.

    Raises:
        ProbMetricError: on any invalid space, law, random variable or reference.
    """
    space = make_space(doc.space.points, doc.space.dist)
    laws = {
        name: Law.from_weights(space, [str(w) for w in weights])
        for name, weights in doc.laws.items()
    }
    rvs: dict[str, RandomVariable] = {}
    for name, triples in doc.random_variables.items():
        try:
            rvs[name] = RandomVariable.from_pieces(
                space, [(str(a), str(b), point) for a, b, point in triples]
            )
        except KeyError as e:
            raise InstanceFormatError(f"random variable '{name}': {e.args[0]}") from None
    sequences: dict[str, SequenceRef] = {}
    for name, seq in doc.sequences.items():
        missing = [n for n in seq.prefix + seq.cycle if n not in rvs]
        if missing:
            raise InstanceFormatError(f"sequence '{name}' references unknown {missing}")
        if not seq.cycle:
            raise InstanceFormatError(f"sequence '{name}' has an empty cycle")
        sequences[name] = SequenceRef(tuple(seq.prefix), tuple(seq.cycle))
    return InstanceBundle(
        space=space,
        laws=laws,
        rvs=rvs,
        sequences=sequences,
        seed=doc.seed,
        provenance=doc.provenance,
    )


def parse_instance(text: str) -> InstanceBundle:
    """
    Parse and validate an instance document.

    Raises:
        InstanceFormatError: on malformed JSON or schema violations.
        ProbMetricError: on invalid mathematical content.
    """
    try:
        doc = InstanceDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"invalid JSON: {e}") from None
    except ValidationError as e:
        raise InstanceFormatError(f"invalid instance document: {e}") from None
    try:
        return bundle_from_document(doc)
    except ProbMetricError:
        raise
    except (ValueError, IndexError, ZeroDivisionError) as e:
        raise InstanceFormatError(str(e)) from None


def print_instance(bundle: InstanceBundle) -> str:
    """Canonical JSON text of a bundle."""
    return json.dumps(bundle.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_instance(path: Union[str, Path]) -> InstanceBundle:
    path = Path(path)
    bundle = parse_instance(path.read_text(encoding="utf-8"))
    logger.info(
        "Loaded instance %s (%d points, %d laws, %d random variables)",
        path,
        bundle.space.size,
        len(bundle.laws),
        len(bundle.rvs),
    )
    return bundle


def dump_instance(bundle: InstanceBundle, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(print_instance(bundle), encoding="utf-8")
    logger.info("Wrote instance file %s", path)
    return path

"""
Probability uniform gauges and their limit operators.

A gauge is either a finite basis of probability metrics or one of the two
parametrized families (Ky-Fan and Prokhorov, all λ > 0). Limit operators are
evaluated on eventually periodic sequences, where every limsup is a finite max.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from ..coupling import glue_chain, random_vertex
from ..errors import InvalidRandomVariableError
from ..metrics.base import MetricValue, ProbabilityMetric, SupOf, max_value
from ..metrics.pathwise import Indicator, KyFan, small_lambda
from ..metrics.simple import Prokhorov, TotalVariation
from ..minimal import hat, hat_with_witness, minimal_descriptor
from ..models import CouplingMatrix, FinMetricSpace, RandomVariable
from ..probability import law_of, realize_chain

logger = logging.getLogger(__name__)

# Representative family members used where a finite list is needed.
LAMBDA_GRID: tuple[Fraction, ...] = (
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(4),
)


class GaugeKind(str, Enum):
    BASIS = "basis"
    KYFAN = "kyfan"
    PROKHOROV = "prok"


@dataclass(frozen=True)
class Gauge:
    """
    A probability uniform gauge given by a basis.

    Attributes:
        kind: Finite basis, or one of the two λ-families.
        basis: The descriptors of a finite basis; empty for families.
    """

    kind: GaugeKind
    basis: tuple[ProbabilityMetric, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind is GaugeKind.BASIS and not self.basis:
            raise ValueError("a finite gauge basis must be nonempty")
        if self.kind is not GaugeKind.BASIS and self.basis:
            raise ValueError("family gauges carry no basis")

    @classmethod
    def finite(cls, *descs: ProbabilityMetric) -> Gauge:
        return cls(GaugeKind.BASIS, tuple(descs))

    @classmethod
    def ky_fan(cls) -> Gauge:
        return cls(GaugeKind.KYFAN)

    @classmethod
    def prokhorov(cls) -> Gauge:
        return cls(GaugeKind.PROKHOROV)

    @property
    def is_family(self) -> bool:
        return self.kind is not GaugeKind.BASIS

    @property
    def simple(self) -> bool:
        if self.kind is GaugeKind.BASIS:
            return all(d.simple for d in self.basis)
        return self.kind is GaugeKind.PROKHOROV

    def members(self, space: FinMetricSpace, with_sup: bool = True) -> list[ProbabilityMetric]:
        """
        Finite stand-ins for the gauge on a given space.

        A basis gives its members plus their sup; a family gives its members at
        the λ grid and at the small λ of the space.
        """
        if self.kind is GaugeKind.BASIS:
            members = list(self.basis)
            if with_sup and len(members) > 1:
                members.append(SupOf(self.basis))
            return members
        lams = sorted(set(LAMBDA_GRID) | {small_lambda(space)})
        family = KyFan if self.kind is GaugeKind.KYFAN else Prokhorov
        return [family(lam) for lam in lams]

    def spec(self) -> str:
        if self.kind is GaugeKind.BASIS:
            return "basis(" + ",".join(d.spec() for d in self.basis) + ")"
        return f"family:{self.kind.value}"

    def __str__(self) -> str:
        return self.spec()


@dataclass(frozen=True)
class SequenceSpec:
    """
    An eventually periodic sequence ξ_0, ξ_1, ...: the prefix, then the cycle forever.

    A cycle of length one is an eventually constant sequence.
    """

    prefix: tuple[RandomVariable, ...]
    cycle: tuple[RandomVariable, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise InvalidRandomVariableError("sequence cycle must be nonempty")
        spaces = {rv.space for rv in self.prefix + self.cycle}
        if len(spaces) != 1:
            raise InvalidRandomVariableError("sequence elements must share one space")

    @classmethod
    def of(
        cls, cycle: Sequence[RandomVariable], prefix: Sequence[RandomVariable] = ()
    ) -> SequenceSpec:
        return cls(prefix=tuple(prefix), cycle=tuple(cycle))

    @property
    def space(self) -> FinMetricSpace:
        return self.cycle[0].space

    def element(self, n: int) -> RandomVariable:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def elements(self) -> tuple[RandomVariable, ...]:
        return self.prefix + self.cycle


def _check_target(seq: SequenceSpec, xi: RandomVariable) -> None:
    if xi.space != seq.space:
        raise InvalidRandomVariableError("limit target must share the sequence space")


def limsup_seq(desc: ProbabilityMetric, seq: SequenceSpec, xi: RandomVariable) -> MetricValue:
    """limsup_n d(ξ, ξ_n): the max over the cycle."""
    _check_target(seq, xi)
    return max_value([desc.evaluate(xi, eta) for eta in seq.cycle])


def limsup_hat(desc: ProbabilityMetric, seq: SequenceSpec, xi: RandomVariable) -> MetricValue:
    """limsup_n d̂(L(ξ), L(ξ_n)): the max of hats over the cycle."""
    _check_target(seq, xi)
    p = law_of(xi)
    return max_value([hat(desc, p, law_of(eta)) for eta in seq.cycle])


def limit_operator(g: Gauge, seq: SequenceSpec, xi: RandomVariable) -> MetricValue:
    """
    λ_G(ξ_n → ξ) as the sup over the basis of limsup_n d(ξ, ξ_n).

    For the families, K_λ and ρ_λ increase to d_i and d_TV as λ decreases, so
    the sup over λ is the limsup of the indicator metric or of total variation.
    """
    if g.kind is GaugeKind.KYFAN:
        return limsup_seq(Indicator(), seq, xi)
    if g.kind is GaugeKind.PROKHOROV:
        return limsup_seq(TotalVariation(), seq, xi)
    return max_value([limsup_seq(d, seq, xi) for d in g.basis])


def limit_operator_window(
    g: Gauge,
    generator: Callable[[int], RandomVariable],
    xi: RandomVariable,
    n0: int,
    n1: int,
) -> MetricValue:
    """
    Streaming estimate: sup over n in [n0, n1] instead of a limsup.

    Works for any generator-driven sequence; the value is flagged uncertified.
    """
    if not 0 <= n0 <= n1:
        raise ValueError(f"window [{n0}, {n1}] must satisfy 0 <= n0 <= n1")
    window = SequenceSpec.of([generator(n) for n in range(n0, n1 + 1)])
    return replace(limit_operator(g, window, xi), certified=False)


def reflect(g: Gauge) -> Gauge:
    """The reflection Ĝ: hats of the basis; the Ky-Fan family maps to Prokhorov."""
    if g.kind is GaugeKind.BASIS:
        return Gauge.finite(*(minimal_descriptor(d) for d in g.basis))
    return Gauge.prokhorov()


def coreflect(g: Gauge) -> ProbabilityMetric:
    """The coreflection d_G: the sup of the basis (indicator or TV for families)."""
    if g.kind is GaugeKind.KYFAN:
        return Indicator()
    if g.kind is GaugeKind.PROKHOROV:
        return TotalVariation()
    if len(g.basis) == 1:
        return g.basis[0]
    return SupOf(g.basis)


@dataclass(frozen=True)
class VersionSequence:
    """A target and sequence with the same one-dimensional laws as the originals."""

    target: RandomVariable
    sequence: SequenceSpec


def _realize_versions(
    seq: SequenceSpec, couplings: Sequence[CouplingMatrix]
) -> VersionSequence:
    variables = realize_chain(glue_chain(couplings))
    target, rest = variables[0], variables[1:]
    k = len(seq.prefix)
    return VersionSequence(target=target, sequence=SequenceSpec.of(rest[k:], rest[:k]))


def version_sequence(
    desc: ProbabilityMetric, seq: SequenceSpec, xi: RandomVariable
) -> VersionSequence:
    """
    Versions (ξ′, ξ′_n) glued from optimal d-couplings of (L(ξ), L(ξ_n)).

    Every d(ξ′, ξ′_n) equals d̂(L(ξ), L(ξ_n)), so the version attains limsup d̂.
    """
    _check_target(seq, xi)
    p = law_of(xi)
    couplings = [hat_with_witness(desc, p, law_of(eta))[1] for eta in seq.elements()]
    return _realize_versions(seq, couplings)


def random_version_sequence(
    seq: SequenceSpec, xi: RandomVariable, rng: np.random.Generator
) -> VersionSequence:
    """Versions glued from random vertex couplings of (L(ξ), L(ξ_n))."""
    _check_target(seq, xi)
    p = law_of(xi)
    couplings = [random_vertex(p, law_of(eta), rng) for eta in seq.elements()]
    return _realize_versions(seq, couplings)


def basis_descriptors(g: Gauge) -> list[ProbabilityMetric]:
    """Descriptors whose limsups make up λ_G (the closed forms for families)."""
    if g.kind is GaugeKind.KYFAN:
        return [Indicator()]
    if g.kind is GaugeKind.PROKHOROV:
        return [TotalVariation()]
    return list(g.basis)


def limit_gap_lower(g: Gauge, seq: SequenceSpec, xi: RandomVariable) -> MetricValue:
    """λ_Ĝ(ξ_n → ξ)."""
    return limit_operator(reflect(g), seq, xi)


def versions_for(
    g: Gauge, seq: SequenceSpec, xi: RandomVariable, rng: Optional[np.random.Generator], budget: int
) -> list[VersionSequence]:
    """Witness-built versions for each basis descriptor plus `budget` random ones."""
    versions = [version_sequence(d, seq, xi) for d in basis_descriptors(g)]
    if rng is not None:
        versions.extend(random_version_sequence(seq, xi, rng) for _ in range(budget))
    return versions

"""
Random contractions — checks that an induced map f̄ respects two gauges.

f̄ is a G_X-G_Y contraction when every e in G_Y is dominated, for each ε > 0
and ω < ∞, by some d in G_X:  e(f̄ξ, f̄η) ∧ ω <= d(ξ, η) + ε. The checks run over
finite test families and finite stand-ins for the gauges, so a failure is a
counterexample relative to those stand-ins and a pass is not a proof.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..metrics.base import EXACT, Comparator, MetricValue, ProbabilityMetric
from ..minimal import hat_with_witness, minimal_descriptor
from ..models import FinMetricSpace, PointRef, RandomVariable
from ..probability import law_of, push_forward, realize_chain
from ..results import Verdict
from .gauge import Gauge

logger = logging.getLogger(__name__)

EPS_OMEGA_GRID: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(1, 4), Fraction(2)),
    (Fraction(1, 2), Fraction(4)),
    (Fraction(1, 8), Fraction(1)),
)

Pair = tuple[RandomVariable, RandomVariable]


@dataclass(frozen=True)
class ContractionViolation:
    """An (e, ε, ω) for which no candidate dominator works on the family."""

    member: str
    eps: Fraction
    omega: Fraction
    pair_index: int
    lhs: MetricValue

    def describe(self) -> str:
        return (
            f"{self.member} ∧ {self.omega} exceeds every dominator + {self.eps} "
            f"(pair {self.pair_index}, lhs {self.lhs.describe()})"
        )


@dataclass(frozen=True)
class ContractionReport:
    passed: bool
    conditions_checked: int
    pairs: int
    violation: Optional[ContractionViolation] = None


def _images(
    mapping: Sequence[PointRef], target: FinMetricSpace, family: Sequence[Pair]
) -> list[Pair]:
    return [
        (push_forward(xi, mapping, target), push_forward(eta, mapping, target))
        for xi, eta in family
    ]


def _check_against(
    mapping: Sequence[PointRef],
    target: FinMetricSpace,
    dominators: Sequence[ProbabilityMetric],
    members: Sequence[ProbabilityMetric],
    family: Sequence[Pair],
    comparator: Comparator,
) -> ContractionReport:
    images = _images(mapping, target, family)
    d_values = [[d.evaluate(xi, eta) for xi, eta in family] for d in dominators]
    checked = 0
    for e in members:
        e_values = [e.evaluate(u, v) for u, v in images]
        for eps, omega in EPS_OMEGA_GRID:
            checked += 1
            first_bad: Optional[int] = None
            for values in d_values:
                bad = next(
                    (
                        k
                        for k, (lhs, rhs) in enumerate(zip(e_values, values))
                        if not comparator.capped_leq(lhs, omega, rhs, eps)
                    ),
                    None,
                )
                if bad is None:
                    break
                first_bad = bad if first_bad is None else first_bad
            else:
                k = first_bad if first_bad is not None else 0
                violation = ContractionViolation(
                    member=e.spec(), eps=eps, omega=omega, pair_index=k, lhs=e_values[k]
                )
                logger.debug("contraction violated: %s", violation.describe())
                return ContractionReport(False, checked, len(family), violation)
    return ContractionReport(True, checked, len(family))


def check_random_contraction(
    mapping: Sequence[PointRef],
    target: FinMetricSpace,
    g_x: Gauge,
    g_y: Gauge,
    family: Sequence[Pair],
    comparator: Comparator = EXACT,
) -> ContractionReport:
    """
    Search the family for a violation of the G_X-G_Y contraction condition.

    `mapping[i]` is the image in `target` of point i of the source space.
    """
    if not family:
        return ContractionReport(True, 0, 0)
    source = family[0][0].space
    return _check_against(
        mapping,
        target,
        g_x.members(source),
        g_y.members(target),
        family,
        comparator,
    )


@dataclass(frozen=True)
class FactorizationReport:
    """
    Whether passing against (G_X, G_Y) implies passing against (Ĝ_X, G_Y).

    SKIP means the map already fails against (G_X, G_Y).
    """

    verdict: Verdict
    original: ContractionReport
    reflected: Optional[ContractionReport] = None
    pairs: int = 0
    notes: list[str] = field(default_factory=list)


def witness_closure(
    dominators: Sequence[ProbabilityMetric], family: Sequence[Pair]
) -> list[Pair]:
    """The family plus, per pair and dominator, a realized optimal coupling of its laws."""
    closed = list(family)
    for xi, eta in family:
        p, q = law_of(xi), law_of(eta)
        for d in dominators:
            witness = hat_with_witness(d, p, q)[1]
            u, v = realize_chain(witness)
            closed.append((u, v))
    return closed


def verify_reflection_factorization(
    mapping: Sequence[PointRef],
    target: FinMetricSpace,
    g_x: Gauge,
    g_y: Gauge,
    family: Sequence[Pair],
    comparator: Comparator = EXACT,
) -> FactorizationReport:
    """
    Check that a contraction into a simple gauge factors through the reflection.

    The family is closed under optimal-coupling witnesses of every dominator,
    so a pass against (G_X, G_Y) on it forces e ∧ ω <= d̂ + ε for simple e.
    """
    if not g_y.simple:
        raise ValueError(f"target gauge {g_y.spec()} must be simple")
    if not family:
        empty = ContractionReport(True, 0, 0)
        return FactorizationReport(Verdict.PASS, empty, empty)
    source = family[0][0].space
    dominators = g_x.members(source)
    members = g_y.members(target)
    closed = witness_closure(dominators, family)
    original = _check_against(mapping, target, dominators, members, closed, comparator)
    if not original.passed:
        return FactorizationReport(
            Verdict.SKIP, original, pairs=len(closed), notes=["not applicable"]
        )
    hats = [minimal_descriptor(d) for d in dominators]
    reflected = _check_against(mapping, target, hats, members, closed, comparator)
    verdict = Verdict.PASS if reflected.passed else Verdict.FAIL
    if not reflected.passed:
        logger.warning(
            "reflection factorization fails for %s -> %s", g_x.spec(), g_y.spec()
        )
    return FactorizationReport(verdict, original, reflected, pairs=len(closed))

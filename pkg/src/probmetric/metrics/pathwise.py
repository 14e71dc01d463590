"""
Pathwise metrics — values read off the distribution of d(xi, eta).

Ky-Fan, L^p, L^∞ and the indicator metric depend on the joint law of their
arguments, not only on the marginals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..models import ZERO, CouplingMatrix, FinMetricSpace, RandomVariable, to_fraction
from .base import MetricValue, ProbabilityMetric


def distance_distribution(pi: CouplingMatrix) -> list[tuple[Fraction, Fraction]]:
    """Distribution of d(x, y) under pi as ascending (distance, mass) pairs."""
    space = pi.row_space
    dist: dict[Fraction, Fraction] = {}
    for (i, j), m in pi.entries:
        t = space.dist[i][j]
        dist[t] = dist.get(t, ZERO) + m
    return sorted(dist.items())


def threshold_index(
    levels: Sequence[Fraction],
    heights: Sequence[Fraction],
    lam: Fraction,
) -> int:
    """Index of the threshold interval that holds the infimum (see threshold_infimum)."""
    for i, height in enumerate(heights[:-1]):
        if height < levels[i] / lam:
            return i
    return len(heights) - 1


def threshold_infimum(
    levels: Sequence[Fraction],
    heights: Sequence[Fraction],
    lam: Fraction,
) -> Fraction:
    """
    Infimum of {eps > 0 : h(lam * eps) below eps} for a step budget h.

    `levels` are the breakpoints t_1 < ... < t_m, `heights[i]` is the value of h on
    the i-th threshold interval (heights[0] before t_1, heights[m] after t_m, which
    must be 0). With b_i = t_i / lam the feasible set is an up-set, so the answer is
    max(b_i, heights[i]) for the first interval where heights[i] < b_{i+1}.
    """
    i = threshold_index(levels, heights, lam)
    lower = levels[i - 1] / lam if i > 0 else ZERO
    return max(lower, heights[i])


def _survival_heights(
    distribution: Sequence[tuple[Fraction, Fraction]],
) -> tuple[list[Fraction], list[Fraction]]:
    """Levels t_i and heights P[D > t_i] (t_0 = 0) for a distance distribution."""
    levels = [t for t, _ in distribution if t > 0]
    heights = []
    for t0 in [ZERO] + levels:
        heights.append(sum((m for t, m in distribution if t > t0), ZERO))
    return levels, heights


@dataclass(frozen=True)
class KyFan(ProbabilityMetric):
    """
    Ky-Fan metric K_λ(ξ, η) = inf{ε > 0 : P[d(ξ, η) >= λε] < ε}.

    Computed exactly from the finite distribution of d(ξ, η).
    """

    lam: Fraction = Fraction(1)
    vertex_optimal = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", to_fraction(self.lam))
        if self.lam <= 0:
            raise ValueError(f"Ky-Fan parameter must be positive, got {self.lam}")

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        levels, heights = _survival_heights(distance_distribution(pi))
        return MetricValue.of(threshold_infimum(levels, heights, self.lam))

    def spec(self) -> str:
        return f"kyfan:{self.lam}"


@dataclass(frozen=True)
class Lp(ProbabilityMetric):
    """
    L^p metric d_p(ξ, η) = (E d(ξ, η)^p)^(1/p).

    Integer p keeps d_p^p rational; rational p >= 1 is evaluated in floating point.
    """

    p: Fraction = Fraction(1)
    affine = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", to_fraction(self.p))
        if self.p <= 0:
            raise ValueError(f"L^p order must be positive, got {self.p}")
        if self.p.denominator != 1 and self.p < 1:
            raise ValueError(f"non-integer L^p order must be >= 1, got {self.p}")

    @property
    def exact_order(self) -> bool:
        return self.p.denominator == 1

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        distribution = distance_distribution(pi)
        if self.exact_order:
            power = sum((m * t ** self.p.numerator for t, m in distribution), ZERO)
            return MetricValue.from_power(power, self.p)
        total = sum(float(m) * float(t) ** float(self.p) for t, m in distribution)
        return MetricValue.floating(total ** (1 / float(self.p)))

    def spec(self) -> str:
        return f"lp:{self.p}"


@dataclass(frozen=True)
class LInf(ProbabilityMetric):
    """L^∞ metric: the largest distance carried with positive probability."""

    vertex_optimal = True

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        distribution = distance_distribution(pi)
        return MetricValue.of(distribution[-1][0] if distribution else ZERO)

    def spec(self) -> str:
        return "linf"


@dataclass(frozen=True)
class Indicator(ProbabilityMetric):
    """Indicator metric d_i(ξ, η) = P[d(ξ, η) > 0]."""

    affine = True

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        return MetricValue.of(sum((m for (i, j), m in pi.entries if i != j), ZERO))

    def spec(self) -> str:
        return "ind"


def ky_fan(lam: Fraction, xi: RandomVariable, eta: RandomVariable) -> MetricValue:
    return KyFan(to_fraction(lam)).evaluate(xi, eta)


def lp_metric(p: Fraction | int, xi: RandomVariable, eta: RandomVariable) -> MetricValue:
    return Lp(to_fraction(p)).evaluate(xi, eta)


def linf_metric(xi: RandomVariable, eta: RandomVariable) -> MetricValue:
    return LInf().evaluate(xi, eta)


def indicator_metric(xi: RandomVariable, eta: RandomVariable) -> MetricValue:
    return Indicator().evaluate(xi, eta)


def small_lambda(space: FinMetricSpace) -> Fraction:
    """
    Half the least positive distance (1 on a one-point space).

    Below this parameter every positive distance clears the Ky-Fan threshold,
    so K_λ equals the indicator metric and ρ_λ equals total variation.
    """
    least = space.min_positive_distance
    return Fraction(1) if least is None else least / 2

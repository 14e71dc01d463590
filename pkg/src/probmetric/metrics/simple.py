"""
Simple metrics — Prokhorov and total variation.

Both depend only on the two marginal laws, so they are evaluated on laws and
ignore how the random variables are coupled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidLawError, SizeLimitError
from ..models import ZERO, CouplingMatrix, Law, to_fraction
from .base import MetricValue, ProbabilityMetric
from .pathwise import threshold_infimum

MAX_SUBSET_POINTS = 16


def _check_same_space(p: Law, q: Law) -> None:
    if p.space != q.space:
        raise InvalidLawError("laws must live on the same space")


def _subset_masses(law: Law) -> list[Fraction]:
    """mass[mask] = law of the point set encoded by the bitmask."""
    n = law.space.size
    masses = [ZERO] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        masses[mask] = masses[mask & (mask - 1)] + law.weights[low]
    return masses


def prokhorov_profile(p: Law, q: Law) -> tuple[list[Fraction], list[Fraction]]:
    """
    Breakpoints t_1 < ... < t_m and g(t_i) = max_A (P[A] - Q[A^(t_i)]), t_0 = 0.

    A^(t) is the closed enlargement; g is constant on [t_i, t_{i+1}).

    Raises:
        SizeLimitError: above 16 points.
    """
    _check_same_space(p, q)
    space = p.space
    n = space.size
    if n > MAX_SUBSET_POINTS:
        raise SizeLimitError("Prokhorov subset enumeration", n, MAX_SUBSET_POINTS)
    q_mass = _subset_masses(q)
    support = p.support()
    levels = list(space.distance_values)
    heights: list[Fraction] = []
    for t in [ZERO] + levels:
        ball = [sum(1 << y for y in range(n) if space.dist[x][y] <= t) for x in range(n)]
        best = ZERO
        # A ranges over subsets of supp(P); extra points only enlarge A^(t).
        k = len(support)
        enlarged = [0] * (1 << k)
        p_mass = [ZERO] * (1 << k)
        for sub in range(1, 1 << k):
            low = (sub & -sub).bit_length() - 1
            rest = sub & (sub - 1)
            enlarged[sub] = enlarged[rest] | ball[support[low]]
            p_mass[sub] = p_mass[rest] + p.weights[support[low]]
            gap = p_mass[sub] - q_mass[enlarged[sub]]
            if gap > best:
                best = gap
        heights.append(best)
    return levels, heights


@dataclass(frozen=True)
class Prokhorov(ProbabilityMetric):
    """
    Prokhorov metric ρ_λ(P, Q) = inf{ε > 0 : P[A] <= Q[A^(λε)] + ε for all A}.

    Exact: the least feasible candidate among {g(t_i)} ∪ {t_i/λ}.
    """

    lam: Fraction = Fraction(1)
    simple = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", to_fraction(self.lam))
        if self.lam <= 0:
            raise ValueError(f"Prokhorov parameter must be positive, got {self.lam}")

    def on_laws(self, p: Law, q: Law) -> MetricValue:
        levels, heights = prokhorov_profile(p, q)
        return MetricValue.of(threshold_infimum(levels, heights, self.lam))

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        return self.on_laws(pi.row_law(), pi.col_law())

    def spec(self) -> str:
        return f"prok:{self.lam}"


@dataclass(frozen=True)
class TotalVariation(ProbabilityMetric):
    """Total variation sup_A |P[A] - Q[A]|, computed as half the L1 distance."""

    simple = True

    def on_laws(self, p: Law, q: Law) -> MetricValue:
        _check_same_space(p, q)
        return MetricValue.of(sum((abs(a - b) for a, b in zip(p.weights, q.weights)), ZERO) / 2)

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        return self.on_laws(pi.row_law(), pi.col_law())

    def spec(self) -> str:
        return "tv"


def prokhorov(lam: Fraction, p: Law, q: Law) -> MetricValue:
    return Prokhorov(to_fraction(lam)).on_laws(p, q)


def total_variation(p: Law, q: Law) -> MetricValue:
    return TotalVariation().on_laws(p, q)


def tv_subset_oracle(p: Law, q: Law) -> Fraction:
    """max_A |P[A] - Q[A]| by enumerating every subset (oracle only)."""
    _check_same_space(p, q)
    n = p.space.size
    if n > MAX_SUBSET_POINTS:
        raise SizeLimitError("total variation subset oracle", n, MAX_SUBSET_POINTS)
    pm, qm = _subset_masses(p), _subset_masses(q)
    return max(abs(a - b) for a, b in zip(pm, qm))

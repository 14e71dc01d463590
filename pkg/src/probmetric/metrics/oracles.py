"""
Dense-grid brute-force oracles for the Ky-Fan and Prokhorov infima.

They evaluate the defining conditions directly at ε = k / 1024 and refine
once inside the bracketing grid cell. Feasible sets are up-sets in ε, so
the first feasible grid point is found by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Callable

from ..errors import SizeLimitError
from ..models import ZERO, CouplingMatrix, Law
from .pathwise import distance_distribution
from .simple import MAX_SUBSET_POINTS, _check_same_space, _subset_masses

GRID_STEP = Fraction(1, 1024)


@dataclass(frozen=True)
class GridOracleResult:
    """First feasible point on the coarse grid and on the refined grid."""

    coarse: Fraction
    refined: Fraction
    step: Fraction

    def brackets(self, value: Fraction) -> bool:
        """True if `value` is at most one grid step below both answers."""
        fine = self.step / 1024
        return value <= self.coarse <= value + self.step and value <= self.refined <= value + fine


def _first_feasible(
    feasible: Callable[[Fraction], bool], lo: Fraction, step: Fraction, count: int
) -> Fraction:
    """Least k in [1, count] with feasible(lo + k*step); count must be feasible."""
    left, right = 1, count
    while left < right:
        mid = (left + right) // 2
        if feasible(lo + mid * step):
            right = mid
        else:
            left = mid + 1
    return lo + left * step


def grid_search(feasible: Callable[[Fraction], bool], upper: Fraction) -> GridOracleResult:
    count = ceil(upper / GRID_STEP) + 1
    coarse = _first_feasible(feasible, ZERO, GRID_STEP, count)
    fine = GRID_STEP / 1024
    refined = _first_feasible(feasible, coarse - GRID_STEP, fine, 1024)
    return GridOracleResult(coarse=coarse, refined=refined, step=GRID_STEP)


def kyfan_grid_oracle(lam: Fraction, pi: CouplingMatrix) -> GridOracleResult:
    distribution = distance_distribution(pi)

    def feasible(eps: Fraction) -> bool:
        return sum((m for t, m in distribution if t >= lam * eps), ZERO) < eps

    diameter = pi.row_space.diameter
    return grid_search(feasible, min(Fraction(1), diameter / lam))


def prokhorov_grid_oracle(lam: Fraction, p: Law, q: Law) -> GridOracleResult:
    _check_same_space(p, q)
    space = p.space
    n = space.size
    if n > MAX_SUBSET_POINTS:
        raise SizeLimitError("Prokhorov grid oracle", n, MAX_SUBSET_POINTS)
    p_mass, q_mass = _subset_masses(p), _subset_masses(q)

    def feasible(eps: Fraction) -> bool:
        radius = lam * eps
        for mask in range(1, 1 << n):
            members = [a for a in range(n) if mask >> a & 1]
            enlarged = sum(1 << x for x in space.enlargement(members, radius))
            if p_mass[mask] > q_mass[enlarged] + eps:
                return False
        return True

    return grid_search(feasible, min(Fraction(1), space.diameter / lam) + GRID_STEP)

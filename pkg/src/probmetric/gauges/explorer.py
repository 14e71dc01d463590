"""
Minimal limit gap — lower and upper bounds for limit operators over versions.

L = λ_Ĝ(ξ_n → ξ) never exceeds λ_G over any version of the sequence. The
upper bound U is the least λ_G found over witness-built and random versions.
Instances where U stays above L after the search are logged as candidates;
they are never reported as proven strict gaps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..metrics.base import MetricValue, compare_values, min_value
from ..models import RandomVariable
from .gauge import Gauge, SequenceSpec, limit_gap_lower, limit_operator, versions_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapReport:
    """
    Attributes:
        lower: L = λ_Ĝ(ξ_n → ξ).
        upper: U = least λ_G over the versions tried.
        versions_tried: Number of version sequences evaluated.
        candidate: True when U > L after the search.
        certified: False when L relies on an uncertified generic hat.
    """

    lower: MetricValue
    upper: MetricValue
    versions_tried: int
    candidate: bool
    certified: bool = True

    @property
    def ordered(self) -> bool:
        """L <= U."""
        return compare_values(self.lower, self.upper) <= 0

    @property
    def gap(self) -> float:
        if self.lower.exact is not None and self.upper.exact is not None:
            return float(self.upper.exact - self.lower.exact)
        return float(self.upper.as_decimal() - self.lower.as_decimal())

    def to_dict(self) -> dict:
        return {
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
            "gap": self.gap,
            "versions_tried": self.versions_tried,
            "candidate": self.candidate,
            "certified": self.certified,
        }


def min_limit_gap(
    g: Gauge,
    seq: SequenceSpec,
    xi: RandomVariable,
    budget: int = 8,
    rng: Optional[np.random.Generator] = None,
) -> GapReport:
    """Report (L, U, U - L) for one instance, with `budget` random versions."""
    lower = limit_gap_lower(g, seq, xi)
    versions = versions_for(g, seq, xi, rng, budget)
    best = min_value([limit_operator(g, v.sequence, v.target) for v in versions])
    candidate = compare_values(best, lower) > 0
    if candidate:
        logger.info(
            "gap candidate for %s: L=%s U=%s", g.spec(), lower.describe(), best.describe()
        )
    return GapReport(
        lower=lower,
        upper=best,
        versions_tried=len(versions),
        candidate=candidate,
        certified=lower.certified,
    )

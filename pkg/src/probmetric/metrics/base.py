"""
Base metric interface.

Every probability metric (Ky-Fan, L^p, L^∞, indicator, Prokhorov, total
variation, sups and minimal metrics) implements ProbabilityMetric. A metric
instance doubles as its own descriptor: it is a frozen, hashable value with a
text form such as `kyfan:1/2` or `sup(ind,tv)`.
"""

from __future__ import annotations

import decimal
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, ClassVar, Optional, Sequence, Union

from ..errors import InvalidRandomVariableError
from ..models import ZERO, CouplingMatrix, Law, RandomVariable
from ..probability import joint_law, law_of

DECIMAL_PRECISION = 60
DECIMAL_SLACK = decimal.Decimal("1e-40")


def _integer_root(n: int, p: int) -> Optional[int]:
    """Exact integer p-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // p + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        power = mid**p
        if power == n:
            return mid
        if power < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def exact_root(value: Fraction, p: int) -> Optional[Fraction]:
    """value^(1/p) when it is rational, else None."""
    num = _integer_root(value.numerator, p)
    den = _integer_root(value.denominator, p)
    if num is None or den is None:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class MetricValue:
    """
    A value in [0, ∞] produced by a probability metric.

    Attributes:
        exact: The value as a rational, or None when it is irrational or infinite.
        approx: Floating approximation (inf for infinite values).
        power: For L^p-type values, the exact rational d^p.
        order: The exponent p that goes with `power`.
        infinite: True for the value +∞.
        certified: False when the value is only an upper bound from a heuristic search.
    """

    exact: Optional[Fraction]
    approx: float
    power: Optional[Fraction] = None
    order: Optional[Fraction] = None
    infinite: bool = False
    certified: bool = True

    @classmethod
    def of(cls, value: Fraction, certified: bool = True) -> MetricValue:
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"metric values are nonnegative, got {value}")
        return cls(exact=value, approx=float(value), certified=certified)

    @classmethod
    def zero(cls) -> MetricValue:
        return cls.of(ZERO)

    @classmethod
    def infinity(cls) -> MetricValue:
        return cls(exact=None, approx=float("inf"), infinite=True)

    @classmethod
    def from_power(cls, power: Fraction, order: Fraction, certified: bool = True) -> MetricValue:
        """Value whose p-th power is the exact rational `power`."""
        order = Fraction(order)
        root = exact_root(power, order.numerator) if order.denominator == 1 else None
        return cls(
            exact=root,
            approx=float(power) ** (1 / float(order)),
            power=power,
            order=order,
            certified=certified,
        )

    @classmethod
    def floating(cls, approx: float, certified: bool = True) -> MetricValue:
        return cls(exact=None, approx=approx, certified=certified)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def is_zero(self) -> bool:
        return self.exact == 0 or (self.power is not None and self.power == 0)

    def as_decimal(self) -> decimal.Decimal:
        with decimal.localcontext() as ctx:
            ctx.prec = DECIMAL_PRECISION
            if self.infinite:
                return decimal.Decimal("Infinity")
            if self.exact is not None:
                return decimal.Decimal(self.exact.numerator) / decimal.Decimal(
                    self.exact.denominator
                )
            if self.power is not None and self.order is not None:
                base = decimal.Decimal(self.power.numerator) / decimal.Decimal(
                    self.power.denominator
                )
                if base == 0:
                    return decimal.Decimal(0)
                exponent = decimal.Decimal(self.order.denominator) / decimal.Decimal(
                    self.order.numerator
                )
                return base**exponent
            return decimal.Decimal(repr(self.approx))

    def _root_form(self) -> Optional[tuple[Fraction, int]]:
        """(base, q) with value = base^(1/q) and integer q, when available."""
        if self.exact is not None:
            return self.exact, 1
        if self.power is not None and self.order is not None and self.order.denominator == 1:
            return self.power, self.order.numerator
        return None

    def describe(self) -> str:
        if self.infinite:
            return "inf"
        mark = "" if self.certified else " (upper bound)"
        if self.exact is not None:
            return f"{self.exact}{mark}"
        if self.power is not None:
            return f"{self.approx:.12g} (p-th power {self.power}, p={self.order}){mark}"
        return f"{self.approx:.12g}{mark}"

    def to_dict(self) -> dict:
        data: dict = {
            "exact": None if self.exact is None else str(self.exact),
            "approx": self.approx if not self.infinite else "inf",
        }
        if self.power is not None:
            data["power"] = str(self.power)
            data["order"] = str(self.order)
        if not self.certified:
            data["certified"] = False
        return data


def compare_values(a: MetricValue, b: MetricValue) -> int:
    """
    Three-way comparison, exact whenever both sides are rational or integer-order roots.

    Falls back to 60-digit decimal comparison for rational orders.
    """
    if a.infinite or b.infinite:
        return (a.infinite > b.infinite) - (a.infinite < b.infinite)
    if a.exact is not None and b.exact is not None:
        return (a.exact > b.exact) - (a.exact < b.exact)
    ra, rb = a._root_form(), b._root_form()
    if ra is not None and rb is not None:
        # a^(1/qa) vs b^(1/qb)  <=>  a^qb vs b^qa
        lhs, rhs = ra[0] ** rb[1], rb[0] ** ra[1]
        return (lhs > rhs) - (lhs < rhs)
    da, db = a.as_decimal(), b.as_decimal()
    if abs(da - db) <= DECIMAL_SLACK:
        return 0
    return 1 if da > db else -1


def max_value(values: Sequence[MetricValue]) -> MetricValue:
    best = values[0]
    for v in values[1:]:
        if compare_values(v, best) > 0:
            best = v
    return best


def min_value(values: Sequence[MetricValue]) -> MetricValue:
    best = values[0]
    for v in values[1:]:
        if compare_values(v, best) < 0:
            best = v
    return best


@dataclass(frozen=True)
class Comparator:
    """
    Relation checks between metric values.

    Exact mode (default) compares rationals exactly and integer-order roots by
    exact powering; sums of irrational roots use 60-digit decimals. Floating
    mode compares `approx` fields within `tolerance`.
    """

    exact: bool = True
    tolerance: Fraction = Fraction(1, 10**9)

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def eq(self, a: MetricValue, b: MetricValue) -> bool:
        if not self.exact:
            return abs(a.approx - b.approx) <= float(self.tolerance)
        return compare_values(a, b) == 0

    def leq(self, a: MetricValue, b: MetricValue) -> bool:
        return self.leq_sum(a, [b])

    def leq_sum(
        self,
        lhs: MetricValue,
        terms: Sequence[MetricValue],
        slack: Fraction = ZERO,
    ) -> bool:
        """lhs <= sum(terms) + slack."""
        if any(t.infinite for t in terms):
            return True
        if lhs.infinite:
            return False
        if not self.exact:
            rhs = sum(t.approx for t in terms) + float(slack)
            return lhs.approx <= rhs + float(self.tolerance)
        if lhs.exact is not None and all(t.exact is not None for t in terms):
            return lhs.exact <= sum((t.exact for t in terms), ZERO) + slack  # type: ignore[misc]
        if len(terms) == 1 and slack == 0:
            return compare_values(lhs, terms[0]) <= 0
        with decimal.localcontext() as ctx:
            ctx.prec = DECIMAL_PRECISION
            rhs_dec = sum((t.as_decimal() for t in terms), decimal.Decimal(0))
            rhs_dec += decimal.Decimal(slack.numerator) / decimal.Decimal(slack.denominator)
            return lhs.as_decimal() <= rhs_dec + DECIMAL_SLACK

    def capped_leq(
        self,
        lhs: MetricValue,
        omega: Fraction,
        rhs: MetricValue,
        eps: Fraction,
    ) -> bool:
        """lhs ∧ omega <= rhs + eps."""
        if self.leq_sum(lhs, [rhs], eps):
            return True
        return self.leq_sum(MetricValue.of(omega), [rhs], eps)

    def deviation(
        self, lhs: MetricValue, rhs: MetricValue, relation: str
    ) -> Union[Fraction, float]:
        """
        |lhs - rhs| for "==", positive part of lhs - rhs for "<=".

        Exact mode returns a Fraction whenever both sides are rational.
        """
        if relation == "==":
            return self._gap(lhs, [rhs], self.eq(lhs, rhs), absolute=True)
        return self._gap(lhs, [rhs], self.leq(lhs, rhs), absolute=False)

    def sum_deviation(
        self, lhs: MetricValue, terms: Sequence[MetricValue]
    ) -> Union[Fraction, float]:
        """Positive part of lhs - sum(terms)."""
        return self._gap(lhs, terms, self.leq_sum(lhs, terms), absolute=False)

    def _gap(
        self, lhs: MetricValue, terms: Sequence[MetricValue], holds: bool, absolute: bool
    ) -> Union[Fraction, float]:
        if holds:
            return ZERO if self.exact else 0.0
        if lhs.infinite or any(t.infinite for t in terms):
            return float("inf")
        if self.exact and lhs.exact is not None and all(t.exact is not None for t in terms):
            diff = lhs.exact - sum((t.exact for t in terms), ZERO)  # type: ignore[misc]
            return abs(diff) if absolute else max(diff, ZERO)
        diff_f = lhs.approx - sum(t.approx for t in terms)
        return abs(diff_f) if absolute else max(diff_f, 0.0)


EXACT = Comparator()


@dataclass(frozen=True)
class MetricFunctional:
    """
    Law-level form of a probability metric: a function of the joint law.

    Attributes:
        evaluator: Maps a coupling of (P, Q) to the metric value.
        simple: True if the value depends only on the two marginals.
        affine: True if the value is a monotone transform of a linear function of
            the coupling.
        vertex_optimal: True if the minimum over the transportation polytope is
            known to be attained at a vertex (affine functionals and a few others).
        name: Label used in logs and reports.
    """

    evaluator: Callable[[CouplingMatrix], MetricValue]
    simple: bool = False
    affine: bool = False
    vertex_optimal: bool = False
    name: str = "functional"

    def __call__(self, pi: CouplingMatrix) -> MetricValue:
        return self.evaluator(pi)


class ProbabilityMetric(ABC):
    """
    Abstract base class for probability metrics on random variables.

    Subclasses implement `on_coupling()`, the value as a function of the joint
    law; axiom (PM) then holds by construction. Simple metrics also override
    `on_laws()` and are evaluated on the two marginals.
    """

    simple: ClassVar[bool] = False
    affine: ClassVar[bool] = False
    vertex_optimal: ClassVar[bool] = False

    @abstractmethod
    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        """Value for any pair of random variables with joint law pi."""
        ...

    @abstractmethod
    def spec(self) -> str:
        """Descriptor text syntax, e.g. `kyfan:1/2`."""
        ...

    def on_laws(self, p: Law, q: Law) -> MetricValue:
        raise TypeError(f"{self.spec()} is not simple; evaluate it on a coupling")

    def evaluate(self, xi: RandomVariable, eta: RandomVariable) -> MetricValue:
        if xi.space != eta.space:
            raise InvalidRandomVariableError("metric arguments must live on the same space")
        if self.simple:
            return self.on_laws(law_of(xi), law_of(eta))
        return self.on_coupling(joint_law(xi, eta))  # type: ignore[arg-type]

    def functional(self) -> MetricFunctional:
        return MetricFunctional(
            evaluator=self.on_coupling,
            simple=self.simple,
            affine=self.affine or self.simple,
            vertex_optimal=bool(self.vertex_optimal or self.affine or self.simple),
            name=self.spec(),
        )

    def __str__(self) -> str:
        return self.spec()


MetricDescriptor = ProbabilityMetric


@dataclass(frozen=True)
class SupOf(ProbabilityMetric):
    """The pointwise supremum of finitely many probability metrics."""

    members: tuple[ProbabilityMetric, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("SupOf needs at least one member")

    @property
    def simple(self) -> bool:  # type: ignore[override]
        return all(m.simple for m in self.members)

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        return max_value([m.on_coupling(pi) for m in self.members])

    def on_laws(self, p: Law, q: Law) -> MetricValue:
        if not self.simple:
            return super().on_laws(p, q)
        return max_value([m.on_laws(p, q) for m in self.members])

    def spec(self) -> str:
        return "sup(" + ",".join(m.spec() for m in self.members) + ")"


def eval_metric(desc: ProbabilityMetric, xi: RandomVariable, eta: RandomVariable) -> MetricValue:
    """Evaluate a descriptor on two random variables over the same space."""
    return desc.evaluate(xi, eta)


def is_simple(desc: ProbabilityMetric) -> bool:
    return bool(desc.simple)

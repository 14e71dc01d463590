"""
Minimal metrics — the hat operator d ↦ d̂.

d̂(P, Q) is the least value of d over couplings of P and Q. Built-in metrics
have exact algorithms (transport LP, bottleneck, threshold profiles); any
other functional goes through the vertex search of `hat_generic`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .coupling import (
    TransportProblem,
    bottleneck_with_witness,
    enumerate_vertices,
    glue,
    mass_above_profile,
    transport_lp,
)
from .errors import InvalidLawError
from .metrics.base import (
    EXACT,
    Comparator,
    MetricFunctional,
    MetricValue,
    ProbabilityMetric,
    SupOf,
    compare_values,
    max_value,
    min_value,
)
from .metrics.pathwise import Indicator, KyFan, LInf, Lp, threshold_index
from .metrics.simple import Prokhorov, TotalVariation
from .models import ZERO, ChainLaw, CouplingMatrix, Law, RandomVariable
from .probability import joint_law, law_of, marginal, realize_chain

logger = logging.getLogger(__name__)

# Convex-combination steps s = k/16 tried between the best vertices.
LINE_SEARCH_STEPS = 16
LINE_SEARCH_TOP = 4


@dataclass(frozen=True)
class MinimalMetric(ProbabilityMetric):
    """The minimal metric d̂ of a probability metric d, written `hat(<desc>)`."""

    inner: ProbabilityMetric
    simple = True

    def on_laws(self, p: Law, q: Law) -> MetricValue:
        return hat(self.inner, p, q)

    def on_coupling(self, pi: CouplingMatrix) -> MetricValue:
        return self.on_laws(pi.row_law(), pi.col_law())

    def spec(self) -> str:
        return f"hat({self.inner.spec()})"


def minimal_descriptor(desc: ProbabilityMetric) -> ProbabilityMetric:
    """Descriptor of d̂ in closed form where one is known."""
    if isinstance(desc, Indicator):
        return TotalVariation()
    if isinstance(desc, KyFan):
        return Prokhorov(desc.lam)
    if desc.simple:
        return desc
    return MinimalMetric(desc)


def _check_laws(p: Law, q: Law) -> None:
    if p.space != q.space:
        raise InvalidLawError("hat needs two laws on the same space")


def _any_coupling(p: Law, q: Law) -> CouplingMatrix:
    return transport_lp(TransportProblem.distance(p, q)).coupling


def _kyfan_hat(lam: Fraction, p: Law, q: Law) -> tuple[MetricValue, CouplingMatrix]:
    """
    Least Ky-Fan value over couplings.

    With m(t) the least coupling mass on {d >= t}, the threshold heights are
    m(t_1), ..., m(t_m), 0. The coupling solving the LP at the active threshold
    attains the infimum.
    """
    profile = mass_above_profile(p, q)
    levels = [t for t, _ in profile]
    heights = [m for _, m in profile] + [ZERO]
    i = threshold_index(levels, heights, lam)
    lower = levels[i - 1] / lam if i > 0 else ZERO
    value = max(lower, heights[i])
    if i < len(levels):
        witness = transport_lp(TransportProblem.threshold(p, q, levels[i])).coupling
    else:
        witness = _any_coupling(p, q)
    return MetricValue.of(value), witness


def hat_with_witness(
    desc: ProbabilityMetric, p: Law, q: Law
) -> tuple[MetricValue, CouplingMatrix]:
    """
    d̂(P, Q) together with an optimal coupling.

    realize_chain(witness) gives (ξ′, η′) with laws P and Q and d(ξ′, η′) = d̂(P, Q).
    """
    _check_laws(p, q)
    if isinstance(desc, MinimalMetric):
        return hat_with_witness(desc.inner, p, q)
    if isinstance(desc, Lp) and desc.exact_order:
        power = desc.p.numerator
        solution = transport_lp(TransportProblem.distance(p, q, power))
        return MetricValue.from_power(solution.value, desc.p), solution.coupling
    if isinstance(desc, LInf):
        level, coupling = bottleneck_with_witness(p, q)
        return MetricValue.of(level), coupling
    if isinstance(desc, Indicator):
        solution = transport_lp(TransportProblem.off_diagonal(p, q))
        return MetricValue.of(solution.value), solution.coupling
    if isinstance(desc, KyFan):
        return _kyfan_hat(desc.lam, p, q)
    if desc.simple:
        return desc.on_laws(p, q), _any_coupling(p, q)
    if isinstance(desc, SupOf):
        return _sup_hat(desc, p, q)
    return hat_generic_with_witness(desc.functional(), p, q)


def hat(desc: ProbabilityMetric, p: Law, q: Law) -> MetricValue:
    """d̂(P, Q) = min over couplings π of (P, Q) of d(π)."""
    return hat_with_witness(desc, p, q)[0]


def _sup_hat(desc: SupOf, p: Law, q: Law) -> tuple[MetricValue, CouplingMatrix]:
    """
    Vertex bound for the hat of a sup, certified when it meets max of member hats.

    The member hats are lower bounds, the vertex search an upper bound.
    """
    lower = max_value([hat(m, p, q) for m in desc.members])
    value, witness = hat_generic_with_witness(desc.functional(), p, q)
    if compare_values(value, lower) == 0:
        value = _with_certified(value, True)
    return value, witness


def _with_certified(value: MetricValue, certified: bool) -> MetricValue:
    return replace(value, certified=certified)


def hat_generic_with_witness(
    f: MetricFunctional, p: Law, q: Law
) -> tuple[MetricValue, CouplingMatrix]:
    """
    Minimize a law-level functional over the transportation polytope.

    Every vertex is evaluated; then convex combinations of the best vertices are
    tried at s = k/16. The result is certified when f is simple or known to be
    minimized at a vertex, otherwise it is an upper bound.

    Raises:
        SizeLimitError: above 6 points.
    """
    _check_laws(p, q)
    if f.simple:
        coupling = _any_coupling(p, q)
        return f(coupling), coupling
    vertices = enumerate_vertices(p, q)
    scored = [(f(v), v) for v in vertices]
    best_value, best = scored[0]
    for value, vertex in scored[1:]:
        if compare_values(value, best_value) < 0:
            best_value, best = value, vertex
    if f.vertex_optimal:
        return best_value, best

    ranked = sorted(range(len(scored)), key=lambda k: scored[k][0].as_decimal())
    top = [scored[k][1] for k in ranked[:LINE_SEARCH_TOP]]
    for a in range(len(top)):
        for b in range(a + 1, len(top)):
            for k in range(1, LINE_SEARCH_STEPS):
                mixed = top[a].mix(top[b], Fraction(k, LINE_SEARCH_STEPS))
                value = f(mixed)
                if compare_values(value, best_value) < 0:
                    best_value, best = value, mixed
    logger.debug(
        "generic hat of %s: %s over %d vertices", f.name, best_value.describe(), len(vertices)
    )
    return _with_certified(best_value, False), best


def hat_generic(f: MetricFunctional, p: Law, q: Law) -> MetricValue:
    return hat_generic_with_witness(f, p, q)[0]


# ── Properties of d̂ ──────────────────────────────────────────────────


def check_simple(desc: ProbabilityMetric) -> bool:
    """d̂ depends only on the two laws; reported from the descriptor of d̂."""
    return bool(minimal_descriptor(desc).simple)


def check_hat_triangle(
    desc: ProbabilityMetric,
    p: Law,
    q: Law,
    r: Law,
    comparator: Comparator = EXACT,
) -> bool:
    """d̂(P, R) <= d̂(P, Q) + d̂(Q, R)."""
    return comparator.leq_sum(hat(desc, p, r), [hat(desc, p, q), hat(desc, q, r)])


@dataclass(frozen=True)
class TriangleWitness:
    """
    The glued three-coordinate construction behind the triangle inequality of d̂.

    Attributes:
        glued: Law on X × X × X with {0,1} marginal `left` and {1,2} marginal `right`.
        left: Optimal coupling of (P, Q).
        right: Optimal coupling of (Q, R).
        outer: The {0,2} marginal, a coupling of (P, R).
        hat_pr, hat_pq, hat_qr: The three hat values.
        d_pr: d on the outer coupling.
        variables: (ξ, η, ζ) realizing `glued`.
    """

    glued: ChainLaw
    left: CouplingMatrix
    right: CouplingMatrix
    outer: CouplingMatrix
    hat_pr: MetricValue
    hat_pq: MetricValue
    hat_qr: MetricValue
    d_pr: MetricValue
    variables: tuple[RandomVariable, ...]

    def marginals_reproduced(self) -> bool:
        return marginal(self.glued, (0, 1)) == self.left and marginal(
            self.glued, (1, 2)
        ) == self.right

    def holds(self, comparator: Comparator = EXACT) -> bool:
        """d̂(P,R) <= d(ξ,ζ) <= d(ξ,η) + d(η,ζ) = d̂(P,Q) + d̂(Q,R)."""
        return (
            self.marginals_reproduced()
            and comparator.leq(self.hat_pr, self.d_pr)
            and comparator.leq_sum(self.d_pr, [self.hat_pq, self.hat_qr])
        )


def glued_triangle_witness(desc: ProbabilityMetric, p: Law, q: Law, r: Law) -> TriangleWitness:
    hat_pq, left = hat_with_witness(desc, p, q)
    hat_qr, right = hat_with_witness(desc, q, r)
    glued = glue(left, right)
    outer: CouplingMatrix = marginal(glued, (0, 2))  # type: ignore[assignment]
    variables = realize_chain(glued)
    return TriangleWitness(
        glued=glued,
        left=left,
        right=right,
        outer=outer,
        hat_pr=hat(desc, p, r),
        hat_pq=hat_pq,
        hat_qr=hat_qr,
        d_pr=desc.evaluate(variables[0], variables[2]),
        variables=variables,
    )


@dataclass(frozen=True)
class MinGaugeResult:
    """Both sides of sup_d d̂ <= hat(sup_d d)."""

    sup_of_hats: MetricValue
    hat_of_sup: MetricValue
    holds: bool

    @property
    def certified(self) -> bool:
        return self.hat_of_sup.certified


def check_min_gauge(
    descs: Sequence[ProbabilityMetric],
    p: Law,
    q: Law,
    comparator: Comparator = EXACT,
) -> MinGaugeResult:
    sup_of_hats = max_value([hat(d, p, q) for d in descs])
    hat_of_sup = hat(SupOf(tuple(descs)), p, q)
    return MinGaugeResult(
        sup_of_hats=sup_of_hats,
        hat_of_sup=hat_of_sup,
        holds=comparator.leq(sup_of_hats, hat_of_sup),
    )


@dataclass(frozen=True)
class DominationTransferResult:
    """
    Outcome of d₁ ∧ ω <= d₂ + ε on a family, and of d̂₁ ∧ ω <= d̂₂ + ε on its laws.

    `applicable` is False when the hypothesis fails on the family; the
    implication then holds vacuously.
    """

    applicable: bool
    conclusion_holds: bool
    pairs_checked: int
    counterexample: Optional[tuple[Law, Law]] = None

    @property
    def passed(self) -> bool:
        return not self.applicable or self.conclusion_holds


def check_domination_transfer(
    d1: ProbabilityMetric,
    d2: ProbabilityMetric,
    eps: Fraction,
    omega: Fraction,
    pairs: Sequence[tuple[RandomVariable, RandomVariable]],
    comparator: Comparator = EXACT,
) -> DominationTransferResult:
    """
    Check that domination of d₁ by d₂ on a family transfers to their hats.

    The family is closed under d₂-hat witnesses: for each pair, a realization of
    an optimal d₂ coupling of its laws is added, which makes a passing
    hypothesis imply the conclusion on every law pair.
    """
    family: list[tuple[RandomVariable, RandomVariable]] = list(pairs)
    law_pairs: list[tuple[Law, Law, MetricValue, CouplingMatrix]] = []
    for xi, eta in pairs:
        p, q = law_of(xi), law_of(eta)
        value, witness = hat_with_witness(d2, p, q)
        law_pairs.append((p, q, value, witness))
        xi_w, eta_w = realize_chain(witness)
        family.append((xi_w, eta_w))

    for xi, eta in family:
        if not comparator.capped_leq(d1.evaluate(xi, eta), omega, d2.evaluate(xi, eta), eps):
            return DominationTransferResult(
                applicable=False, conclusion_holds=True, pairs_checked=len(family)
            )

    for p, q, hat_d2, witness in law_pairs:
        hat_d1 = hat(d1, p, q)
        if not hat_d1.certified:
            hat_d1 = min_value([hat_d1, d1.on_coupling(witness)])
        if not comparator.capped_leq(hat_d1, omega, hat_d2, eps):
            logger.warning("domination transfer fails for %s vs %s", p.describe(), q.describe())
            return DominationTransferResult(
                applicable=True,
                conclusion_holds=False,
                pairs_checked=len(family),
                counterexample=(p, q),
            )
    return DominationTransferResult(
        applicable=True, conclusion_holds=True, pairs_checked=len(family)
    )


def hat_below_metric(
    desc: ProbabilityMetric,
    xi: RandomVariable,
    eta: RandomVariable,
    comparator: Comparator = EXACT,
) -> bool:
    """d̂(L(ξ), L(η)) <= d(ξ, η)."""
    pi: CouplingMatrix = joint_law(xi, eta)  # type: ignore[assignment]
    return comparator.leq(hat(desc, law_of(xi), law_of(eta)), desc.on_coupling(pi))

"""
Properties of the minimal metric d̂ as a simple probability metric.
"""

from __future__ import annotations

from ..instances.loader import InstanceBundle
from ..metrics import Indicator, KyFan, LInf, Lp, ProbabilityMetric, Prokhorov, TotalVariation
from ..minimal import (
    check_hat_triangle,
    check_simple,
    glued_triangle_witness,
    hat,
    hat_below_metric,
    hat_with_witness,
)
from ..probability import law_of, realize_chain
from ..results import CheckResult, check_result
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import builtin_metrics, equality, law_pairs, law_triple, predicate, rv_pairs


def hat_metrics() -> list[ProbabilityMetric]:
    return [KyFan(1), Lp(1), Lp(2), LInf(), Indicator(), Prokhorov(1), TotalVariation()]


def check_hat_below(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """d̂(L(ξ), L(η)) <= d(ξ, η)."""
    results = []
    for d in hat_metrics():
        for xi, eta in rv_pairs(bundle):
            ok = hat_below_metric(d, xi, eta, ctx.comparator)
            lhs, rhs = hat(d, law_of(xi), law_of(eta)), d.evaluate(xi, eta)
            results.append(
                check_result(
                    "hat<=d",
                    ok,
                    d.spec(),
                    ctx.comparator.deviation(lhs, rhs, "<="),
                    f"{lhs.describe()} > {rhs.describe()}",
                )
            )
    return results


def check_triangle(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    p, q, r = law_triple(bundle)
    results = []
    for d in hat_metrics():
        for a, b, c in ((p, q, r), (q, r, p), (r, p, q)):
            results.append(
                predicate("hat-triangle", check_hat_triangle(d, a, b, c, ctx.comparator), d.spec())
            )
    return results


def check_glued_witness(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """The glued coupling reproduces both marginals and closes the inequality chain."""
    p, q, r = law_triple(bundle)
    results = []
    for d in hat_metrics():
        witness = glued_triangle_witness(d, p, q, r)
        results.append(
            predicate("glued-marginals", witness.marginals_reproduced(), d.spec())
        )
        results.append(
            predicate(
                "glued-chain",
                witness.holds(ctx.comparator),
                d.spec(),
                f"hat(P,R)={witness.hat_pr.describe()} d(ξ,ζ)={witness.d_pr.describe()}",
            )
        )
    return results


def check_witness_exact(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Realizing the optimal coupling gives the prescribed laws and attains d̂."""
    results = []
    for d in hat_metrics():
        for p, q in law_pairs(bundle):
            value, witness = hat_with_witness(d, p, q)
            xi, eta = realize_chain(witness)
            results.append(
                predicate("witness-laws", law_of(xi) == p and law_of(eta) == q, d.spec())
            )
            results.append(
                equality("witness-value", d.spec(), d.evaluate(xi, eta), value, ctx.comparator)
            )
    return results


def check_hat_simple(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [predicate("hat-simple", check_simple(d), d.spec()) for d in builtin_metrics()]


register_suite(
    InvariantSuite(
        name="minimal",
        profile="default",
        description="d̂ <= d, triangle inequality of d̂ and its glued witness",
    ).add_checks(
        [
            check_hat_below,
            check_triangle,
            check_glued_witness,
            check_witness_exact,
            check_hat_simple,
        ]
    )
)

"""
Invariance under law-preserving relayouts and a.e. modifications.
"""

from __future__ import annotations

from ..instances.loader import InstanceBundle
from ..probability import joint_law, law_of, marginal, realize, shuffle_layout, subdivide
from ..results import CheckResult
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import builtin_metrics, equality, predicate, rv_pairs


def check_joint_law_invariance(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Pairs with equal joint laws get equal values."""
    results = []
    for xi, eta in rv_pairs(bundle):
        xi2, eta2 = shuffle_layout((xi, eta), ctx.rng)
        results.append(
            predicate("shuffle-preserves-joint", joint_law(xi, eta) == joint_law(xi2, eta2))
        )
        for d in builtin_metrics():
            results.append(
                equality(
                    "joint-law-invariance",
                    d.spec(),
                    d.evaluate(xi, eta),
                    d.evaluate(xi2, eta2),
                    ctx.comparator,
                )
            )
    return results


def check_ae_invariance(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Modifying either side on a null set does not change the value."""
    results = []
    for xi, eta in rv_pairs(bundle):
        xi2, eta2 = subdivide(xi, ctx.rng), subdivide(eta)
        for d in builtin_metrics():
            results.append(
                equality(
                    "ae-invariance",
                    d.spec(),
                    d.evaluate(xi, eta),
                    d.evaluate(xi2, eta2),
                    ctx.comparator,
                )
            )
    return results


def check_realize_law(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [
        predicate("realize-law", law_of(realize(p)) == p, detail=p.describe())
        for p in bundle.law_list()
    ]


def check_marginals(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Marginals of the joint law are the individual laws."""
    rvs = bundle.rv_list()
    pi = joint_law(*rvs)
    return [
        predicate(
            "joint-marginal",
            marginal(pi, [k]).marginal_law(0) == law_of(xi),
            param=f"axis {k}",
        )
        for k, xi in enumerate(rvs)
    ]


register_suite(
    InvariantSuite(
        name="invariance",
        profile="default",
        description="Values depend on the joint law only and ignore null sets",
    ).add_checks(
        [check_joint_law_invariance, check_ae_invariance, check_realize_law, check_marginals]
    )
)

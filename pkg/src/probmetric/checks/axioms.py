"""
Metric axioms: symmetry, reflexivity, separation and the triangle inequality.
"""

from __future__ import annotations

from ..instances.loader import InstanceBundle
from ..probability import equal_ae, law_of
from ..results import CheckResult, check_result
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import builtin_metrics, equality, predicate, rv_pairs, rv_triples


def check_symmetry(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for d in builtin_metrics():
        for xi, eta in rv_pairs(bundle):
            results.append(
                equality(
                    "symmetry", d.spec(), d.evaluate(xi, eta), d.evaluate(eta, xi), ctx.comparator
                )
            )
    return results


def check_reflexivity(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for d in builtin_metrics():
        for xi in bundle.rv_list():
            value = d.evaluate(xi, xi)
            results.append(
                predicate("reflexivity", value.is_zero, d.spec(), f"d(ξ, ξ) = {value.describe()}")
            )
    return results


def check_separation(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """d(ξ, η) = 0 exactly when ξ = η a.e. (pathwise) or L(ξ) = L(η) (simple)."""
    results = []
    for d in builtin_metrics():
        for xi, eta in rv_pairs(bundle):
            same = law_of(xi) == law_of(eta) if d.simple else equal_ae(xi, eta)
            zero = d.evaluate(xi, eta).is_zero
            results.append(
                predicate("separation", zero == same, d.spec(), f"zero={zero} identical={same}")
            )
    return results


def check_triangle(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for d in builtin_metrics():
        for xi, eta, zeta in rv_triples(bundle):
            lhs = d.evaluate(xi, zeta)
            left, right = d.evaluate(xi, eta), d.evaluate(eta, zeta)
            ok = ctx.comparator.leq_sum(lhs, [left, right])
            results.append(
                check_result(
                    "triangle",
                    ok,
                    d.spec(),
                    ctx.comparator.sum_deviation(lhs, [left, right]),
                    f"{lhs.describe()} > {left.describe()} + {right.describe()}",
                )
            )
    return results


register_suite(
    InvariantSuite(
        name="axioms",
        profile="default",
        description="Symmetry, reflexivity, separation and triangle inequality of every metric",
    ).add_checks([check_symmetry, check_reflexivity, check_separation, check_triangle])
)

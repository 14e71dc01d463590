"""
Closed forms of reflections and coreflections, and random contraction checks.
"""

from __future__ import annotations

from fractions import Fraction

from ..gauges import (
    LAMBDA_GRID,
    Gauge,
    check_random_contraction,
    coreflect,
    reflect,
    verify_reflection_factorization,
)
from ..instances.loader import InstanceBundle
from ..metrics import Indicator, KyFan, Prokhorov, TotalVariation, small_lambda
from ..results import CheckResult, Verdict
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import equality, inequality, predicate, rv_pairs


def check_small_lambda(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """At λ below half the least distance, K_λ = d_i and ρ_λ = TV."""
    lam = small_lambda(bundle.space)
    results = []
    for xi, eta in rv_pairs(bundle):
        results.append(
            equality(
                "small-λ-kyfan=ind",
                "",
                KyFan(lam).evaluate(xi, eta),
                Indicator().evaluate(xi, eta),
                ctx.comparator,
            )
        )
        results.append(
            equality(
                "small-λ-prok=tv",
                "",
                Prokhorov(lam).evaluate(xi, eta),
                TotalVariation().evaluate(xi, eta),
                ctx.comparator,
            )
        )
    return results


def check_closed_forms(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    kyfan, prok = Gauge.ky_fan(), Gauge.prokhorov()
    single = Gauge.finite(KyFan(Fraction(1)))
    return [
        predicate("coreflect", coreflect(kyfan) == Indicator(), kyfan.spec()),
        predicate("coreflect", coreflect(prok) == TotalVariation(), prok.spec()),
        predicate("coreflect", coreflect(single) == KyFan(Fraction(1)), single.spec()),
        predicate("reflect", reflect(kyfan) == prok, kyfan.spec()),
        predicate(
            "reflect", reflect(single) == Gauge.finite(Prokhorov(Fraction(1))), single.spec()
        ),
        predicate(
            "reflect",
            reflect(Gauge.finite(Indicator())) == Gauge.finite(TotalVariation()),
            "basis(ind)",
        ),
    ]


def check_lambda_monotone(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Both families decrease in λ and stay below their coreflection."""
    results = []
    grid = sorted(LAMBDA_GRID)
    for xi, eta in rv_pairs(bundle):
        for family, top in ((KyFan, Indicator()), (Prokhorov, TotalVariation())):
            values = [family(lam).evaluate(xi, eta) for lam in grid]
            for lam, smaller, larger in zip(grid[1:], values[1:], values):
                results.append(
                    inequality(
                        "λ-monotone",
                        f"{family.__name__} λ={lam}",
                        smaller,
                        larger,
                        ctx.comparator,
                    )
                )
            results.append(
                inequality(
                    "below-coreflection",
                    family.__name__,
                    values[0],
                    top.evaluate(xi, eta),
                    ctx.comparator,
                )
            )
    return results


def _random_map(bundle: InstanceBundle, ctx: CheckContext) -> list[int]:
    n = bundle.space.size
    return [int(k) for k in ctx.rng.integers(n, size=n)]


def check_contractions(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """The identity map contracts a gauge to itself and to anything it dominates."""
    family = list(rv_pairs(bundle))
    identity = list(range(bundle.space.size))
    results = []
    for g_x, g_y in (
        (Gauge.ky_fan(), Gauge.ky_fan()),
        (Gauge.finite(Indicator()), Gauge.finite(TotalVariation())),
        (Gauge.ky_fan(), Gauge.prokhorov()),
    ):
        report = check_random_contraction(
            identity, bundle.space, g_x, g_y, family, ctx.comparator
        )
        detail = report.violation.describe() if report.violation else ""
        results.append(
            predicate("identity-contraction", report.passed, f"{g_x.spec()}->{g_y.spec()}", detail)
        )
    return results


def check_factorization(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """A contraction into a simple gauge is also a contraction from the reflection."""
    family = list(rv_pairs(bundle))
    results = []
    for mapping_label, mapping in (
        ("identity", list(range(bundle.space.size))),
        ("random", _random_map(bundle, ctx)),
    ):
        for g_x, g_y in (
            (Gauge.finite(Indicator()), Gauge.finite(TotalVariation())),
            (Gauge.ky_fan(), Gauge.prokhorov()),
        ):
            report = verify_reflection_factorization(
                mapping, bundle.space, g_x, g_y, family, ctx.comparator
            )
            detail = ""
            if report.verdict is Verdict.FAIL and report.reflected and report.reflected.violation:
                detail = report.reflected.violation.describe()
            results.append(
                CheckResult(
                    "reflection-factorization",
                    f"{mapping_label} {g_x.spec()}->{g_y.spec()}",
                    report.verdict,
                    Fraction(1 if report.verdict is Verdict.FAIL else 0),
                    detail,
                )
            )
    return results


register_suite(
    InvariantSuite(
        name="coreflections",
        profile="default",
        description="Small-λ closed forms, reflections and random contractions",
    ).add_checks(
        [
            check_small_lambda,
            check_closed_forms,
            check_lambda_monotone,
            check_contractions,
            check_factorization,
        ]
    )
)

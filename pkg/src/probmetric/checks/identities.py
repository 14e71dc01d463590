"""
Closed forms of minimal metrics, checked with zero tolerance in exact mode.

hat(K_λ) = ρ_λ, hat(d_i) = TV, hat(L^p) = transport optimum of d^p and
hat(L^∞) = bottleneck; hats of simple metrics are the metrics themselves.
"""

from __future__ import annotations

from ..coupling import TransportProblem, bottleneck, enumerate_vertices, transport_lp
from ..instances.loader import InstanceBundle
from ..metrics import (
    Indicator,
    KyFan,
    LInf,
    Lp,
    MetricValue,
    Prokhorov,
    TotalVariation,
    min_value,
    prokhorov,
    total_variation,
    tv_subset_oracle,
)
from ..minimal import MinimalMetric, hat
from ..results import CheckResult, Verdict
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import KYFAN_LAMBDAS, LP_ORDERS, equality, law_pairs

# Support-size product up to which hat(L^p) is also compared with every vertex.
VERTEX_CELLS = 16


def check_kyfan_prokhorov(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for lam in KYFAN_LAMBDAS:
        for p, q in law_pairs(bundle):
            results.append(
                equality(
                    "hat-kyfan=prokhorov",
                    f"λ={lam}",
                    hat(KyFan(lam), p, q),
                    prokhorov(lam, p, q),
                    ctx.comparator,
                )
            )
    return results


def check_indicator_tv(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [
        equality("hat-ind=tv", "", hat(Indicator(), p, q), total_variation(p, q), ctx.comparator)
        for p, q in law_pairs(bundle)
    ]


def check_lp_transport(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for order in LP_ORDERS:
        metric = Lp(order)
        for p, q in law_pairs(bundle):
            value = hat(metric, p, q)
            optimum = transport_lp(TransportProblem.distance(p, q, order)).value
            results.append(
                equality(
                    "hat-lp=transport",
                    f"p={order}",
                    value,
                    MetricValue.from_power(optimum, order),
                    ctx.comparator,
                )
            )
            if len(p.support()) * len(q.support()) > VERTEX_CELLS:
                results.append(CheckResult("hat-lp=vertex-min", f"p={order}", Verdict.SKIP))
                continue
            best = min_value([metric.on_coupling(v) for v in enumerate_vertices(p, q)])
            results.append(
                equality("hat-lp=vertex-min", f"p={order}", value, best, ctx.comparator)
            )
    return results


def check_linf_bottleneck(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [
        equality(
            "hat-linf=bottleneck",
            "",
            hat(LInf(), p, q),
            MetricValue.of(bottleneck(p, q)),
            ctx.comparator,
        )
        for p, q in law_pairs(bundle)
    ]


def check_idempotence(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """hat(d) = d for simple d, and hat(hat(d)) = hat(d)."""
    results = []
    for d in (Prokhorov(1), TotalVariation(), MinimalMetric(Lp(1))):
        for p, q in law_pairs(bundle):
            results.append(
                equality("idempotence", d.spec(), hat(d, p, q), d.on_laws(p, q), ctx.comparator)
            )
    return results


def check_tv_oracle(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [
        equality(
            "tv=subset-oracle",
            "",
            total_variation(p, q),
            MetricValue.of(tv_subset_oracle(p, q)),
            ctx.comparator,
        )
        for p, q in law_pairs(bundle)
    ]


register_suite(
    InvariantSuite(
        name="identities",
        profile="default",
        description="hat(K_λ)=ρ_λ, hat(d_i)=TV, hat(L^p)=W_p, hat(L^∞)=bottleneck",
    ).add_checks(
        [
            check_kyfan_prokhorov,
            check_indicator_tv,
            check_lp_transport,
            check_linf_bottleneck,
            check_idempotence,
            check_tv_oracle,
        ]
    )
)

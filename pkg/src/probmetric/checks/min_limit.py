"""
Minimal limit operators: L = λ_Ĝ never exceeds λ_G over versions, and the
Prokhorov family limit never exceeds the Ky-Fan family limit.
"""

from __future__ import annotations

from ..gauges import Gauge, limit_operator, min_limit_gap, random_version_sequence
from ..instances.loader import InstanceBundle
from ..metrics import Indicator, LInf, Lp
from ..results import CheckResult, check_result
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import inequality

GAP_BUDGET = 4


def gap_gauges() -> list[Gauge]:
    return [
        Gauge.ky_fan(),
        Gauge.prokhorov(),
        Gauge.finite(Lp(1)),
        Gauge.finite(Indicator(), LInf()),
    ]


def check_gap_ordered(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    xi = bundle.rv_list()[0]
    for name in sorted(bundle.sequences):
        seq = bundle.sequence(name)
        for g in gap_gauges():
            report = min_limit_gap(g, seq, xi, budget=GAP_BUDGET, rng=ctx.rng)
            result = check_result(
                "lower<=upper",
                report.ordered,
                g.spec(),
                ctx.comparator.deviation(report.lower, report.upper, "<="),
                f"{name}: L={report.lower.describe()} U={report.upper.describe()}",
            )
            result.metadata["candidate"] = report.candidate
            results.append(result)
    return results


def check_prokhorov_below_kyfan(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    xi = bundle.rv_list()[0]
    kyfan, prok = Gauge.ky_fan(), Gauge.prokhorov()
    for name in sorted(bundle.sequences):
        seq = bundle.sequence(name)
        version = random_version_sequence(seq, xi, ctx.rng)
        cases = (("identical", seq, xi), ("version", version.sequence, version.target))
        for label, s, target in cases:
            results.append(
                inequality(
                    "prokhorov<=kyfan",
                    label,
                    limit_operator(prok, s, target),
                    limit_operator(kyfan, s, target),
                    ctx.comparator,
                )
            )
    return results


register_suite(
    InvariantSuite(
        name="min-limit",
        profile="default",
        description="L <= U for minimal limit gaps; λ_P <= λ_K",
    ).add_checks([check_gap_ordered, check_prokhorov_below_kyfan])
)

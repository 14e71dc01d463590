"""
Shared helpers for the invariant checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

from ..instances.loader import InstanceBundle
from ..metrics import (
    Comparator,
    Indicator,
    KyFan,
    LInf,
    Lp,
    MetricValue,
    ProbabilityMetric,
    Prokhorov,
    TotalVariation,
)
from ..models import Law, RandomVariable
from ..results import CheckResult, check_result

KYFAN_LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(2))
LP_ORDERS = (1, 2, 3)


def builtin_metrics() -> list[ProbabilityMetric]:
    """Every built-in metric at its test parameters."""
    metrics: list[ProbabilityMetric] = [KyFan(lam) for lam in KYFAN_LAMBDAS]
    metrics += [Lp(p) for p in LP_ORDERS]
    metrics += [LInf(), Indicator()]
    metrics += [Prokhorov(lam) for lam in KYFAN_LAMBDAS]
    metrics.append(TotalVariation())
    return metrics


def non_simple_metrics() -> list[ProbabilityMetric]:
    return [KyFan(1), Lp(1), Lp(2), LInf(), Indicator()]


def rv_pairs(bundle: InstanceBundle) -> Iterator[tuple[RandomVariable, RandomVariable]]:
    for a, b in combinations(bundle.rv_list(), 2):
        yield a, b


def rv_triples(
    bundle: InstanceBundle,
) -> Iterator[tuple[RandomVariable, RandomVariable, RandomVariable]]:
    rvs = bundle.rv_list()
    if len(rvs) < 3:
        rvs = rvs + rvs[:1] * (3 - len(rvs))
    for a, b, c in permutations(rvs[:3], 3):
        yield a, b, c


def law_pairs(bundle: InstanceBundle) -> Iterator[tuple[Law, Law]]:
    laws = bundle.law_list()
    for a, b in combinations(laws, 2):
        yield a, b
    if laws:
        yield laws[0], laws[0]


def law_triple(bundle: InstanceBundle) -> tuple[Law, Law, Law]:
    laws = bundle.law_list()
    while len(laws) < 3:
        laws.append(laws[-1])
    return laws[0], laws[1], laws[2]


def equality(
    check: str,
    param: str,
    lhs: MetricValue,
    rhs: MetricValue,
    comparator: Comparator,
) -> CheckResult:
    ok = comparator.eq(lhs, rhs)
    return check_result(
        check,
        ok,
        param,
        comparator.deviation(lhs, rhs, "=="),
        f"{lhs.describe()} != {rhs.describe()}",
    )


def inequality(
    check: str,
    param: str,
    lhs: MetricValue,
    rhs: MetricValue,
    comparator: Comparator,
) -> CheckResult:
    ok = comparator.leq(lhs, rhs)
    return check_result(
        check,
        ok,
        param,
        comparator.deviation(lhs, rhs, "<="),
        f"{lhs.describe()} > {rhs.describe()}",
    )


def predicate(check: str, ok: bool, param: str = "", detail: str = "") -> CheckResult:
    return check_result(check, ok, param, Fraction(1), detail or f"{check} does not hold")

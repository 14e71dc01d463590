"""
Minimal gauges: sup of hats against the hat of a sup, and domination transfer.
"""

from __future__ import annotations

from fractions import Fraction

from ..gauges import EPS_OMEGA_GRID
from ..instances.loader import InstanceBundle
from ..metrics import Indicator, KyFan, LInf, Lp, ProbabilityMetric
from ..minimal import check_domination_transfer, check_min_gauge
from ..results import CheckResult, Verdict, check_result
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import builtin_metrics, law_pairs, rv_pairs

MAX_BASIS = 3

# Pairs with d₁ <= d₂ pathwise, so the hypothesis always holds.
DOMINATED_PAIRS: tuple[tuple[ProbabilityMetric, ProbabilityMetric], ...] = (
    (KyFan(Fraction(1)), Indicator()),
    (Lp(1), Lp(2)),
    (Lp(2), LInf()),
)


def random_basis(ctx: CheckContext) -> list[ProbabilityMetric]:
    metrics = builtin_metrics()
    size = int(ctx.rng.integers(1, MAX_BASIS + 1))
    picks = ctx.rng.choice(len(metrics), size=size, replace=False)
    return [metrics[int(k)] for k in sorted(picks)]


def check_sup_of_hats(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """sup_d d̂ <= hat(sup_d d) on a random basis."""
    basis = random_basis(ctx)
    label = ",".join(d.spec() for d in basis)
    results = []
    for p, q in law_pairs(bundle):
        outcome = check_min_gauge(basis, p, q, ctx.comparator)
        results.append(
            check_result(
                "sup-of-hats<=hat-of-sup",
                outcome.holds,
                f"size={len(basis)}",
                ctx.comparator.deviation(outcome.sup_of_hats, outcome.hat_of_sup, "<="),
                f"basis({label}): {outcome.sup_of_hats.describe()} > "
                f"{outcome.hat_of_sup.describe()}",
            )
        )
    return results


def _transfer_pairs(
    bundle: InstanceBundle, ctx: CheckContext
) -> list[tuple[ProbabilityMetric, ProbabilityMetric]]:
    basis = random_basis(ctx)
    extra = [(basis[0], basis[-1])] if len(basis) > 1 else []
    return list(DOMINATED_PAIRS) + extra


def check_transfer(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """d₁ ∧ ω <= d₂ + ε on the family carries over to d̂₁ ∧ ω <= d̂₂ + ε."""
    family = list(rv_pairs(bundle))
    results = []
    for d1, d2 in _transfer_pairs(bundle, ctx):
        for eps, omega in EPS_OMEGA_GRID[:2]:
            outcome = check_domination_transfer(d1, d2, eps, omega, family, ctx.comparator)
            param = f"ε={eps},ω={omega}"
            if not outcome.applicable:
                results.append(CheckResult("domination-transfer", param, Verdict.SKIP))
                continue
            detail = ""
            if outcome.counterexample is not None:
                p, q = outcome.counterexample
                detail = f"{d1.spec()} vs {d2.spec()} at {p.describe()} / {q.describe()}"
            results.append(
                check_result("domination-transfer", outcome.passed, param, Fraction(1), detail)
            )
    return results


register_suite(
    InvariantSuite(
        name="min-gauge",
        profile="small",
        description="Hats of a finite basis and (ε, ω)-domination transfer",
    ).add_checks([check_sup_of_hats, check_transfer])
)

"""
Limit operators of minimal metrics are attained by law-preserving versions.

For an eventually periodic sequence, limsup d̂(L(ξ), L(ξ_n)) must equal the
limsup of d along the version glued from optimal couplings; in particular ξ_n
converges in d̂ exactly when some version converges in d.
"""

from __future__ import annotations

from ..gauges import (
    Gauge,
    SequenceSpec,
    limit_operator,
    limit_operator_window,
    limsup_hat,
    limsup_seq,
    random_version_sequence,
    version_sequence,
)
from ..gauges.gauge import VersionSequence
from ..instances.loader import InstanceBundle
from ..metrics import Indicator, KyFan, LInf, Lp, Prokhorov, TotalVariation
from ..models import RandomVariable
from ..probability import law_of, shuffle_layout, subdivide
from ..results import CheckResult
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import equality, predicate

VERSION_METRICS = (KyFan(1), Lp(1), Lp(2), LInf(), Indicator())


def _instances(bundle: InstanceBundle) -> list[tuple[str, SequenceSpec, RandomVariable]]:
    target = bundle.rv_list()[0]
    return [(name, bundle.sequence(name), target) for name in sorted(bundle.sequences)]


def _preserves_laws(v: VersionSequence, seq: SequenceSpec, xi: RandomVariable) -> bool:
    if law_of(v.target) != law_of(xi) or len(v.sequence.prefix) != len(seq.prefix):
        return False
    return all(
        law_of(a) == law_of(b) for a, b in zip(v.sequence.elements(), seq.elements())
    )


def check_versions_attain(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for name, seq, xi in _instances(bundle):
        for d in VERSION_METRICS:
            version = version_sequence(d, seq, xi)
            lower = limsup_hat(d, seq, xi)
            attained = limsup_seq(d, version.sequence, version.target)
            results.append(equality("version-attains", d.spec(), attained, lower, ctx.comparator))
            results.append(
                predicate(
                    "convergence-iff",
                    lower.is_zero == attained.is_zero,
                    d.spec(),
                    f"{name}: hat limsup {lower.describe()}, version {attained.describe()}",
                )
            )
    return results


def check_versions_preserve_laws(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for name, seq, xi in _instances(bundle):
        witness_built = version_sequence(Lp(1), seq, xi)
        random_built = random_version_sequence(seq, xi, ctx.rng)
        results.append(
            predicate("version-laws", _preserves_laws(witness_built, seq, xi), "witness", name)
        )
        results.append(
            predicate("version-laws", _preserves_laws(random_built, seq, xi), "random", name)
        )
    return results


def check_law_constant(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Re-realizations of one law converge for the Prokhorov family and simple bases."""
    xi = bundle.rv_list()[0]
    cycle = [shuffle_layout((xi,), ctx.rng)[0] for _ in range(3)]
    seq = SequenceSpec.of(cycle)
    results = []
    for g in (Gauge.prokhorov(), Gauge.finite(TotalVariation(), Prokhorov(1))):
        value = limit_operator(g, seq, xi)
        results.append(predicate("law-constant", value.is_zero, g.spec(), value.describe()))
    return results


def check_ae_invariance(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for _, seq, xi in _instances(bundle):
        modified = SequenceSpec.of(
            [subdivide(e, ctx.rng) for e in seq.cycle],
            [subdivide(e, ctx.rng) for e in seq.prefix],
        )
        for g in (Gauge.ky_fan(), Gauge.finite(Lp(1), LInf())):
            results.append(
                equality(
                    "limit-ae-invariance",
                    g.spec(),
                    limit_operator(g, seq, xi),
                    limit_operator(g, modified, subdivide(xi)),
                    ctx.comparator,
                )
            )
    return results


def check_window(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """A window covering one full period past the prefix gives the limit value."""
    results = []
    for _, seq, xi in _instances(bundle):
        start = len(seq.prefix)
        end = start + 2 * len(seq.cycle) - 1
        for g in (Gauge.ky_fan(), Gauge.finite(KyFan(1), Lp(2))):
            windowed = limit_operator_window(g, seq.element, xi, start, end)
            results.append(
                equality("window", g.spec(), windowed, limit_operator(g, seq, xi), ctx.comparator)
            )
    return results


register_suite(
    InvariantSuite(
        name="limit-theorem",
        profile="default",
        description="Version sequences attain limsup of hats; law-preserving invariances",
    ).add_checks(
        [
            check_versions_attain,
            check_versions_preserve_laws,
            check_law_constant,
            check_ae_invariance,
            check_window,
        ]
    )
)

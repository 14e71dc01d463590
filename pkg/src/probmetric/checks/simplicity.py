"""
Simplicity: which metrics depend only on the two one-dimensional laws.

Prokhorov and total variation must agree on every re-realization of the laws.
For the pathwise metrics each bundle probes two couplings of the same laws;
the suite-level step then requires a counterexample for every one of them.
"""

from __future__ import annotations

from ..coupling import random_vertex
from ..instances.loader import InstanceBundle
from ..metrics import Prokhorov, TotalVariation, compare_values, is_simple
from ..models import ChainLaw, CouplingMatrix
from ..probability import law_of, realize_chain
from ..results import CaseResult, CheckResult
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import KYFAN_LAMBDAS, builtin_metrics, equality, non_simple_metrics, predicate

SIMPLE_SPECS = frozenset(
    [Prokhorov(lam).spec() for lam in KYFAN_LAMBDAS] + [TotalVariation().spec()]
)


def check_simple_invariance(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Simple metrics agree on the original pair and on a random re-realization."""
    results = []
    rvs = bundle.rv_list()
    for xi, eta in zip(rvs, rvs[1:] + rvs[:1]):
        p, q = law_of(xi), law_of(eta)
        xi2, eta2 = realize_chain(random_vertex(p, q, ctx.rng))
        for d in builtin_metrics():
            if not d.simple:
                continue
            results.append(
                equality(
                    "law-invariance",
                    d.spec(),
                    d.evaluate(xi, eta),
                    d.evaluate(xi2, eta2),
                    ctx.comparator,
                )
            )
    return results


def _probe_couplings(
    bundle: InstanceBundle, ctx: CheckContext
) -> list[tuple[CouplingMatrix, CouplingMatrix]]:
    """Pairs of couplings with identical marginals."""
    probes = []
    for xi in bundle.rv_list():
        p = law_of(xi)
        product: CouplingMatrix = ChainLaw.product(p, p)  # type: ignore[assignment]
        probes.append((CouplingMatrix.diagonal(p), product))
    laws = bundle.law_list()
    for p, q in zip(laws, laws[1:]):
        probes.append((random_vertex(p, q, ctx.rng), random_vertex(p, q, ctx.rng)))
    return probes


def check_non_simple_probe(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Record which pathwise metrics separate two couplings with equal marginals."""
    probes = _probe_couplings(bundle, ctx)
    results = []
    for d in non_simple_metrics():
        found = any(
            compare_values(d.on_coupling(a), d.on_coupling(b)) != 0 for a, b in probes
        )
        result = predicate("non-simple-probe", True, d.spec())
        result.metadata["counterexample"] = found
        results.append(result)
    return results


def check_classification(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    return [
        predicate(
            "classification",
            is_simple(d) == (d.spec() in SIMPLE_SPECS),
            d.spec(),
            f"is_simple reports {is_simple(d)}",
        )
        for d in builtin_metrics()
    ]


def counterexamples_found(cases: list[CaseResult]) -> list[CheckResult]:
    """Every pathwise metric needs at least one counterexample across the run."""
    found: dict[str, bool] = {d.spec(): False for d in non_simple_metrics()}
    for case in cases:
        for r in case.check_results:
            if r.check == "non-simple-probe" and r.metadata.get("counterexample"):
                found[r.param] = True
    return [
        predicate("counterexample-found", ok, spec, f"no counterexample to simplicity of {spec}")
        for spec, ok in sorted(found.items())
    ]


register_suite(
    InvariantSuite(
        name="simplicity",
        profile="default",
        description="Law invariance of Prokhorov and TV, counterexamples for pathwise metrics",
        finalize=counterexamples_found,
    ).add_checks([check_simple_invariance, check_non_simple_probe, check_classification])
)

"""
Gluing constructions reproduce every prescribed pairwise marginal.
"""

from __future__ import annotations

from ..coupling import glue, glue_chain, random_vertex
from ..errors import MarginalMismatchError
from ..instances.loader import InstanceBundle
from ..models import CouplingMatrix
from ..probability import joint_law, law_of, marginal
from ..results import CheckResult, Verdict
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import law_triple, predicate

MAX_CHAIN = 8


def check_glue(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    p, q, r = law_triple(bundle)
    left, right = random_vertex(p, q, ctx.rng), random_vertex(q, r, ctx.rng)
    rvs = bundle.rv_list()
    cases: list[tuple[str, CouplingMatrix, CouplingMatrix]] = [("vertices", left, right)]
    if len(rvs) >= 3:
        pair_01: CouplingMatrix = joint_law(rvs[0], rvs[1])  # type: ignore[assignment]
        pair_12: CouplingMatrix = joint_law(rvs[1], rvs[2])  # type: ignore[assignment]
        cases.append(("joint-laws", pair_01, pair_12))
    for label, pi1, pi2 in cases:
        glued = glue(pi1, pi2)
        results.append(
            predicate(
                "glue-marginals",
                marginal(glued, (0, 1)) == pi1 and marginal(glued, (1, 2)) == pi2,
                label,
            )
        )
    return results


def check_glue_chain(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    rvs = bundle.rv_list()
    target = law_of(rvs[0])
    laws = [law_of(rvs[k % len(rvs)]) for k in range(1, MAX_CHAIN + 1)]
    results = []
    for length in (1, 3, MAX_CHAIN):
        couplings = [random_vertex(target, q, ctx.rng) for q in laws[:length]]
        chain = glue_chain(couplings)
        ok = all(marginal(chain, (0, n)) == pi for n, pi in enumerate(couplings, start=1))
        if length == 1:
            ok = chain == couplings[0]
        results.append(predicate("glue-chain-marginals", ok, f"N={length}"))
    return results


def check_mismatch(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """Couplings whose shared marginals disagree are rejected."""
    laws = bundle.law_list()
    pair = next(((a, b) for a in laws for b in laws if a != b), None)
    if pair is None:
        return [CheckResult("mismatch-rejected", verdict=Verdict.SKIP)]
    p, q = pair
    pi1, pi2 = random_vertex(p, p, ctx.rng), random_vertex(q, q, ctx.rng)
    try:
        glue(pi1, pi2)
    except MarginalMismatchError:
        rejected = True
    else:
        rejected = False
    return [predicate("mismatch-rejected", rejected, detail="glue accepted mismatched couplings")]


register_suite(
    InvariantSuite(
        name="gluing",
        profile="chain",
        description="glue and glue_chain reproduce the prescribed marginals",
    ).add_checks([check_glue, check_glue_chain, check_mismatch])
)

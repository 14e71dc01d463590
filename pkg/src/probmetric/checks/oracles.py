"""
Concordance of the exact evaluators with brute-force oracles.
"""

from __future__ import annotations

from fractions import Fraction

from ..coupling import (
    TransportProblem,
    bottleneck,
    enumerate_vertices,
    min_mass_above,
    transport_lp,
)
from ..instances.loader import InstanceBundle
from ..metrics import KyFan, kyfan_grid_oracle, prokhorov, prokhorov_grid_oracle
from ..models import CouplingMatrix, Law
from ..probability import joint_law
from ..results import CheckResult, Verdict
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import KYFAN_LAMBDAS, law_pairs, predicate, rv_pairs

# Spaces up to this size are also checked against full vertex enumeration.
VERTEX_ORACLE_POINTS = 4


def _objective(problem: TransportProblem, pi: CouplingMatrix) -> Fraction:
    return sum((m * problem.cost[i][j] for (i, j), m in pi.entries), Fraction(0))


def check_kyfan_grid(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for lam in KYFAN_LAMBDAS:
        for xi, eta in rv_pairs(bundle):
            pi: CouplingMatrix = joint_law(xi, eta)  # type: ignore[assignment]
            value = KyFan(lam).on_coupling(pi)
            oracle = kyfan_grid_oracle(lam, pi)
            results.append(
                predicate(
                    "kyfan-grid",
                    value.exact is not None and oracle.brackets(value.exact),
                    f"λ={lam}",
                    f"value {value.describe()} vs grid {oracle.coarse}/{oracle.refined}",
                )
            )
    return results


def check_prokhorov_grid(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    for lam in KYFAN_LAMBDAS:
        for p, q in law_pairs(bundle):
            value = prokhorov(lam, p, q)
            oracle = prokhorov_grid_oracle(lam, p, q)
            results.append(
                predicate(
                    "prokhorov-grid",
                    value.exact is not None and oracle.brackets(value.exact),
                    f"λ={lam}",
                    f"value {value.describe()} vs grid {oracle.coarse}/{oracle.refined}",
                )
            )
    return results


def _problems(p: Law, q: Law, ctx: CheckContext) -> list[TransportProblem]:
    n = p.space.size
    random_cost = ctx.rng.integers(0, 10, size=(n, n))
    return [
        TransportProblem.distance(p, q, 1),
        TransportProblem.distance(p, q, 2),
        TransportProblem.off_diagonal(p, q),
        TransportProblem.with_cost(p, q, [[int(c) for c in row] for row in random_cost]),
    ]


def check_transport_vertices(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """The simplex optimum equals the best vertex, and its coupling has the right marginals."""
    if bundle.space.size > VERTEX_ORACLE_POINTS:
        return [CheckResult("transport=vertex-min", verdict=Verdict.SKIP)]
    results = []
    for p, q in law_pairs(bundle):
        vertices = enumerate_vertices(p, q)
        for problem in _problems(p, q, ctx):
            solution = transport_lp(problem)
            best = min(_objective(problem, v) for v in vertices)
            results.append(
                predicate(
                    "transport=vertex-min",
                    solution.value == best,
                    problem.label,
                    f"simplex {solution.value} vs vertices {best}",
                )
            )
            results.append(
                predicate(
                    "transport-marginals",
                    solution.coupling.row_law() == p and solution.coupling.col_law() == q,
                    problem.label,
                )
            )
        level = bottleneck(p, q)
        best_level = min(
            max((p.space.d(i, j) for i, j in v.support()), default=Fraction(0))
            for v in vertices
        )
        results.append(
            predicate("bottleneck=vertex-min", level == best_level, "", f"{level} vs {best_level}")
        )
    return results


def check_mass_above_monotone(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    results = []
    levels = bundle.space.distance_values
    for p, q in law_pairs(bundle):
        masses = [min_mass_above(t, p, q) for t in levels]
        ok = all(a >= b for a, b in zip(masses, masses[1:]))
        results.append(predicate("mass-above-monotone", ok, detail=f"{masses}"))
    return results


register_suite(
    InvariantSuite(
        name="oracles",
        profile="small",
        description="Grid oracles bracket K_λ and ρ_λ; simplex agrees with vertex enumeration",
    ).add_checks(
        [
            check_kyfan_grid,
            check_prokhorov_grid,
            check_transport_vertices,
            check_mass_above_monotone,
        ]
    )
)

"""
Transport solver — exact optimization over the transportation polytope.

Implements the transportation simplex on rational data: north-west-corner
start, MODI potentials on the basis tree, Bland's rule for the entering cell
and smallest-index tie breaking for the leaving cell.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from ..errors import InvalidLawError, SolverError
from ..models import ZERO, CouplingMatrix, Law, RationalLike, make_chain, to_fraction

logger = logging.getLogger(__name__)

CostMatrix = tuple[tuple[Fraction, ...], ...]

# Pivots allowed per basic cell before the solver gives up.
PIVOT_GUARD = 200


@dataclass(frozen=True)
class TransportProblem:
    """
    Minimize Σ π(x, y)·cost(x, y) over couplings π of (p, q).

    Attributes:
        p: Row law.
        q: Column law, on the same space.
        cost: Square matrix of rationals indexed like the space.
        label: Short name of the cost used in logs.
    """

    p: Law
    q: Law
    cost: CostMatrix
    label: str = "custom"

    def __post_init__(self) -> None:
        if self.p.space != self.q.space:
            raise InvalidLawError("transport laws must live on the same space")
        n = self.p.space.size
        if len(self.cost) != n or any(len(row) != n for row in self.cost):
            raise InvalidLawError(f"cost matrix must be {n}x{n}")

    @classmethod
    def with_cost(
        cls, p: Law, q: Law, cost: Sequence[Sequence[RationalLike]], label: str = "custom"
    ) -> TransportProblem:
        return cls(p, q, tuple(tuple(to_fraction(c) for c in row) for row in cost), label)

    @classmethod
    def distance(cls, p: Law, q: Law, power: int = 1) -> TransportProblem:
        """Cost d(x, y)^power."""
        dist = p.space.dist
        return cls(p, q, tuple(tuple(v**power for v in row) for row in dist), f"d^{power}")

    @classmethod
    def threshold(cls, p: Law, q: Law, t: Fraction) -> TransportProblem:
        """Cost 1 on {d >= t}, 0 elsewhere."""
        one, dist = Fraction(1), p.space.dist
        cost = tuple(tuple(one if v >= t else ZERO for v in row) for row in dist)
        return cls(p, q, cost, f"1[d>={t}]")

    @classmethod
    def off_diagonal(cls, p: Law, q: Law) -> TransportProblem:
        """Cost 1 off the diagonal: the expected indicator metric."""
        n = p.space.size
        cost = tuple(tuple(Fraction(int(i != j)) for j in range(n)) for i in range(n))
        return cls(p, q, cost, "1[x!=y]")


@dataclass(frozen=True)
class TransportSolution:
    """Optimal value, an optimal vertex coupling, and the number of pivots."""

    value: Fraction
    coupling: CouplingMatrix
    iterations: int


def _north_west_corner(
    supply: list[Fraction], demand: list[Fraction]
) -> dict[tuple[int, int], Fraction]:
    """Initial basic feasible solution with exactly m + n - 1 basic cells."""
    s, d = list(supply), list(demand)
    m, n = len(s), len(d)
    basis: dict[tuple[int, int], Fraction] = {}
    i = j = 0
    while True:
        x = min(s[i], d[j])
        basis[(i, j)] = x
        s[i] -= x
        d[j] -= x
        if i == m - 1 and j == n - 1:
            return basis
        # A simultaneous exhaustion moves down and keeps a degenerate zero cell.
        if s[i] == 0 and i < m - 1:
            i += 1
        else:
            j += 1


def _potentials(
    basis: dict[tuple[int, int], Fraction], cost: list[list[Fraction]], m: int, n: int
) -> tuple[list[Fraction], list[Fraction]]:
    """u, v with u_i + v_j = c_ij on every basic cell (u_0 = 0)."""
    row_adj: list[list[int]] = [[] for _ in range(m)]
    col_adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in basis:
        row_adj[i].append(j)
        col_adj[j].append(i)
    u: list[Optional[Fraction]] = [None] * m
    v: list[Optional[Fraction]] = [None] * n
    u[0] = ZERO
    queue: deque[tuple[str, int]] = deque([("r", 0)])
    while queue:
        kind, k = queue.popleft()
        if kind == "r":
            for j in row_adj[k]:
                if v[j] is None:
                    v[j] = cost[k][j] - u[k]  # type: ignore[operator]
                    queue.append(("c", j))
        else:
            for i in col_adj[k]:
                if u[i] is None:
                    u[i] = cost[i][k] - v[k]  # type: ignore[operator]
                    queue.append(("r", i))
    if any(x is None for x in u) or any(x is None for x in v):
        raise SolverError("basis is not a spanning tree")
    return u, v  # type: ignore[return-value]


def _tree_path(
    basis: dict[tuple[int, int], Fraction], m: int, n: int, col: int, row: int
) -> list[tuple[int, int]]:
    """Basic cells on the tree path from column `col` to row `row`."""
    row_adj: list[list[int]] = [[] for _ in range(m)]
    col_adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in basis:
        row_adj[i].append(j)
        col_adj[j].append(i)
    start, goal = ("c", col), ("r", row)
    parent: dict[tuple[str, int], Optional[tuple[tuple[str, int], tuple[int, int]]]] = {
        start: None
    }
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        kind, k = node
        if kind == "c":
            neighbours = [(("r", i), (i, k)) for i in col_adj[k]]
        else:
            neighbours = [(("c", j), (k, j)) for j in row_adj[k]]
        for nxt, cell in neighbours:
            if nxt not in parent:
                parent[nxt] = (node, cell)
                queue.append(nxt)
    if goal not in parent:
        raise SolverError(f"no tree path from column {col} to row {row}")
    path: list[tuple[int, int]] = []
    node = goal
    while parent[node] is not None:
        prev, cell = parent[node]  # type: ignore[misc]
        path.append(cell)
        node = prev
    path.reverse()
    return path


def _solve(
    supply: list[Fraction], demand: list[Fraction], cost: list[list[Fraction]]
) -> tuple[dict[tuple[int, int], Fraction], int]:
    m, n = len(supply), len(demand)
    basis = _north_west_corner(supply, demand)
    guard = PIVOT_GUARD * (m + n)
    for iteration in range(guard):
        u, v = _potentials(basis, cost, m, n)
        entering = next(
            (
                (i, j)
                for i in range(m)
                for j in range(n)
                if (i, j) not in basis and cost[i][j] - u[i] - v[j] < 0
            ),
            None,
        )
        if entering is None:
            return basis, iteration
        i, j = entering
        path = _tree_path(basis, m, n, col=j, row=i)
        # Signs alternate along the path, starting with - next to column j.
        minus = path[0::2]
        plus = path[1::2]
        theta = min(basis[c] for c in minus)
        leaving = min(c for c in minus if basis[c] == theta)
        for c in minus:
            basis[c] -= theta
        for c in plus:
            basis[c] += theta
        del basis[leaving]
        basis[entering] = theta
        logger.debug("pivot %d: enter %s leave %s theta %s", iteration, entering, leaving, theta)
    raise SolverError(f"transportation simplex exceeded {guard} pivots")


def transport_lp(problem: TransportProblem) -> TransportSolution:
    """
    Exact minimum of the expected cost over couplings of (p, q).

    The returned coupling is a vertex of the transportation polytope with
    marginals exactly p and q.
    """
    rows = problem.p.support()
    cols = problem.q.support()
    supply = [problem.p.weights[i] for i in rows]
    demand = [problem.q.weights[j] for j in cols]
    cost = [[problem.cost[i][j] for j in cols] for i in rows]
    basis, iterations = _solve(supply, demand, cost)
    mass = {(rows[a], cols[b]): x for (a, b), x in basis.items()}
    space = problem.p.space
    coupling: CouplingMatrix = make_chain((space, space), mass)  # type: ignore[assignment]
    value = sum((x * problem.cost[i][j] for (i, j), x in mass.items()), ZERO)
    logger.debug("transport %s solved in %d pivots, value %s", problem.label, iterations, value)
    return TransportSolution(value=value, coupling=coupling, iterations=iterations)


def min_mass_above(t: Fraction, p: Law, q: Law) -> Fraction:
    """Least mass any coupling of (p, q) puts on {d >= t}."""
    return transport_lp(TransportProblem.threshold(p, q, to_fraction(t))).value


@lru_cache(maxsize=256)
def mass_above_profile(p: Law, q: Law) -> tuple[tuple[Fraction, Fraction], ...]:
    """(t_i, min_mass_above(t_i)) for every positive distance value, ascending."""
    return tuple((t, min_mass_above(t, p, q)) for t in p.space.distance_values)


def bottleneck_with_witness(p: Law, q: Law) -> tuple[Fraction, CouplingMatrix]:
    """
    Least level L such that some coupling lives on {d <= L}, with such a coupling.

    L ranges over 0 and the distance values; the coupling minimizes the mass
    on {d > L}, which is zero exactly when L is feasible.
    """
    levels = (ZERO,) + p.space.distance_values
    for level, above in zip(levels, levels[1:]):
        solution = transport_lp(TransportProblem.threshold(p, q, above))
        if solution.value == 0:
            return level, solution.coupling
    top = levels[-1]
    return top, transport_lp(TransportProblem.distance(p, q)).coupling


def bottleneck(p: Law, q: Law) -> Fraction:
    return bottleneck_with_witness(p, q)[0]

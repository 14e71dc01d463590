"""
Gluing — joint laws with prescribed two-dimensional marginals.

Both constructions make the outer coordinates conditionally independent given
the shared one, which reproduces every prescribed marginal exactly.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from ..errors import MarginalMismatchError
from ..models import Cell, ChainLaw, CouplingMatrix, make_chain


def _rows_by_first(pi: CouplingMatrix) -> dict[int, list[tuple[int, Fraction]]]:
    grouped: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for (x, y), m in pi.entries:
        grouped[x].append((y, m))
    return grouped


def glue(pi1: CouplingMatrix, pi2: CouplingMatrix) -> ChainLaw:
    """
    π(x0, x1, x2) = π1(x0, x1)·π2(x1, x2) / μ(x1) on X0 × X1 × X2.

    Raises:
        MarginalMismatchError: unless the second marginal of pi1 equals the first of pi2.
    """
    mu = pi1.col_law()
    if mu != pi2.row_law():
        raise MarginalMismatchError(
            f"middle marginals differ: {mu.describe()} vs {pi2.row_law().describe()}"
        )
    forward = _rows_by_first(pi2)
    mass: dict[Cell, Fraction] = {}
    for (x0, x1), m in pi1.entries:
        for x2, m2 in forward[x1]:
            mass[(x0, x1, x2)] = m * m2 / mu.weights[x1]
    return make_chain((pi1.row_space, pi1.col_space, pi2.col_space), mass)


def glue_chain(couplings: Sequence[CouplingMatrix]) -> ChainLaw:
    """
    One law on X0 × X1 × ... × XN whose {0, n} marginal is couplings[n-1].

    Raises:
        MarginalMismatchError: if the couplings disagree on the X0 marginal.
    """
    if not couplings:
        raise MarginalMismatchError("glue_chain needs at least one coupling")
    mu = couplings[0].row_law()
    for n, pi in enumerate(couplings[1:], start=2):
        if pi.row_law() != mu:
            raise MarginalMismatchError(
                f"coupling {n} has first marginal {pi.row_law().describe()}, "
                f"expected {mu.describe()}"
            )
    if len(couplings) == 1:
        return couplings[0]
    mass: dict[Cell, Fraction] = {(x0,): w for x0, w in enumerate(mu.weights) if w > 0}
    for pi in couplings:
        forward = _rows_by_first(pi)
        extended: dict[Cell, Fraction] = {}
        for cell, m in mass.items():
            x0 = cell[0]
            for xn, mn in forward[x0]:
                extended[cell + (xn,)] = m * mn / mu.weights[x0]
        mass = extended
    spaces = (couplings[0].row_space,) + tuple(pi.col_space for pi in couplings)
    return make_chain(spaces, mass)

"""
Operations on random variables over the sample space [0,1).

Laws, joint laws, marginals, realization of laws as random variables, almost
sure equality, and law-preserving rearrangements of the sample space.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidLawError, InvalidRandomVariableError
from .models import (
    ZERO,
    Cell,
    ChainLaw,
    FinMetricSpace,
    Interval,
    Law,
    Piece,
    RandomVariable,
    make_chain,
    make_space,
)

logger = logging.getLogger(__name__)

__all__ = [
    "make_space",
    "law_of",
    "joint_law",
    "marginal",
    "realize",
    "realize_chain",
    "equal_ae",
    "common_refinement",
    "shuffle_layout",
    "subdivide",
    "push_forward",
]


def law_of(xi: RandomVariable) -> Law:
    """Image measure of xi: weights[x] is the total length of pieces mapped to x."""
    weights = [ZERO] * xi.space.size
    for piece in xi.pieces:
        weights[piece.point] += piece.interval.length
    return Law(space=xi.space, weights=tuple(weights))


def common_refinement(rvs: Sequence[RandomVariable]) -> list[tuple[Interval, Cell]]:
    """
    Cells of the common refinement of the interval partitions.

    Returns (interval, values) pairs in sample-space order, where values[k] is the
    point taken by rvs[k] on that interval.
    """
    if not rvs:
        raise InvalidRandomVariableError("need at least one random variable")
    cuts = sorted({b for rv in rvs for b in rv.breakpoints()})
    cells = []
    for a, b in zip(cuts, cuts[1:]):
        cells.append((Interval(a, b), tuple(rv.value_at(a) for rv in rvs)))
    return cells


def joint_law(*rvs: RandomVariable) -> ChainLaw:
    """
    Joint law of (xi_1, ..., xi_k) on the product of their spaces.

    Two arguments give a CouplingMatrix.
    """
    mass: dict[Cell, Fraction] = {}
    for interval, values in common_refinement(rvs):
        mass[values] = mass.get(values, ZERO) + interval.length
    return make_chain(tuple(rv.space for rv in rvs), mass)


def marginal(pi: ChainLaw, axes: Iterable[int]) -> ChainLaw:
    """
    Image of pi under the projection onto the given axes (kept in ascending order).

    Raises:
        InvalidLawError: if the axis set is empty or out of range.
    """
    keep = sorted(set(axes))
    if not keep:
        raise InvalidLawError("marginal needs a nonempty axis set")
    if keep[0] < 0 or keep[-1] >= pi.rank:
        raise InvalidLawError(f"axes {keep} out of range for rank {pi.rank}")
    mass: dict[Cell, Fraction] = {}
    for cell, m in pi.entries:
        key = tuple(cell[a] for a in keep)
        mass[key] = mass.get(key, ZERO) + m
    return make_chain(tuple(pi.spaces[a] for a in keep), mass)


def _stack(atoms: Sequence[tuple[Cell, Fraction]], spaces: Sequence[FinMetricSpace]):
    """Lay atoms out as consecutive intervals with cumulative rational endpoints."""
    columns: list[list[Piece]] = [[] for _ in spaces]
    cursor = ZERO
    for cell, m in atoms:
        if m <= 0:
            continue
        interval = Interval(cursor, cursor + m)
        for k, point in enumerate(cell):
            columns[k].append(Piece(interval, point))
        cursor += m
    if cursor != 1:
        raise InvalidLawError(f"atoms carry total mass {cursor}, not 1")
    return tuple(
        RandomVariable(space=space, pieces=tuple(pieces)).canonical()
        for space, pieces in zip(spaces, columns)
    )


def realize(law: Law) -> RandomVariable:
    """A random variable with law exactly `law` (atoms stacked in point order)."""
    (xi,) = _stack([((i,), w) for i, w in enumerate(law.weights)], (law.space,))
    return xi


def realize_chain(pi: ChainLaw) -> tuple[RandomVariable, ...]:
    """Random variables whose joint law is exactly pi (atoms stacked lexicographically)."""
    return _stack(list(pi.entries), pi.spaces)


def equal_ae(xi: RandomVariable, xi_prime: RandomVariable) -> bool:
    """True iff the set where the two variables differ has length zero."""
    if xi.space != xi_prime.space:
        raise InvalidRandomVariableError("equal_ae needs variables on the same space")
    return all(values[0] == values[1] for _, values in common_refinement([xi, xi_prime]))


def _relayout(
    cells: Sequence[tuple[Fraction, Cell]], spaces: Sequence[FinMetricSpace]
) -> tuple[RandomVariable, ...]:
    columns: list[list[Piece]] = [[] for _ in spaces]
    cursor = ZERO
    for length, values in cells:
        interval = Interval(cursor, cursor + length)
        for k, point in enumerate(values):
            columns[k].append(Piece(interval, point))
        cursor += length
    return tuple(
        RandomVariable(space=space, pieces=tuple(pieces))
        for space, pieces in zip(spaces, columns)
    )


def shuffle_layout(
    rvs: Sequence[RandomVariable],
    rng: np.random.Generator,
    split_probability: float = 0.5,
) -> tuple[RandomVariable, ...]:
    """
    Apply one random interval exchange of [0,1) to all variables at once.

    Cells of the common refinement are split at their midpoint with the given
    probability, then permuted. The joint law of the tuple is unchanged.
    """
    cells: list[tuple[Fraction, Cell]] = []
    for interval, values in common_refinement(rvs):
        if rng.random() < split_probability:
            half = interval.length / 2
            cells.extend([(half, values), (half, values)])
        else:
            cells.append((interval.length, values))
    order = rng.permutation(len(cells))
    shuffled = [cells[int(k)] for k in order]
    return _relayout(shuffled, [rv.space for rv in rvs])


def subdivide(xi: RandomVariable, rng: Optional[np.random.Generator] = None) -> RandomVariable:
    """
    Split pieces into adjacent sub-intervals carrying the same point.

    Without a generator every piece is halved; the result is equal a.e. to xi.
    """
    pieces: list[Piece] = []
    for piece in xi.pieces:
        a, b = piece.interval.start, piece.interval.end
        if rng is None:
            mid = a + (b - a) / 2
        elif rng.random() < 0.5:
            mid = a + (b - a) * Fraction(int(rng.integers(1, 4)), 4)
        else:
            pieces.append(piece)
            continue
        pieces.append(Piece(Interval(a, mid), piece.point))
        pieces.append(Piece(Interval(mid, b), piece.point))
    return RandomVariable(space=xi.space, pieces=tuple(pieces))


def push_forward(
    xi: RandomVariable, mapping: Sequence[int], target: FinMetricSpace
) -> RandomVariable:
    """The induced variable f∘xi for a point map f given as target indices."""
    if len(mapping) != xi.space.size:
        raise InvalidRandomVariableError(
            f"point map has {len(mapping)} entries for {xi.space.size} points"
        )
    pieces = tuple(Piece(p.interval, target.index(mapping[p.point])) for p in xi.pieces)
    return RandomVariable(space=target, pieces=pieces)


def uniform_law(space: FinMetricSpace) -> Law:
    n = space.size
    return Law(space=space, weights=tuple(Fraction(1, n) for _ in range(n)))

"""
Vertices of the transportation polytope Π(P, Q).

A vertex has a spanning-forest support, so it always has a cell x_ij equal to
min(s_i, d_j) at a leaf. Eliminating that cell and the exhausted line(s)
recursively reaches every vertex; choosing cells at random gives a random
vertex without enumerating.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import InvalidLawError, SizeLimitError
from ..models import CouplingMatrix, Law, make_chain

logger = logging.getLogger(__name__)

MAX_VERTEX_POINTS = 6

Line = tuple[tuple[int, Fraction], ...]
Support = frozenset[tuple[tuple[int, int], Fraction]]


def _lines(p: Law, q: Law) -> tuple[Line, Line]:
    if p.space != q.space:
        raise InvalidLawError("laws must live on the same space")
    rows = tuple((i, w) for i, w in enumerate(p.weights) if w > 0)
    cols = tuple((j, w) for j, w in enumerate(q.weights) if w > 0)
    return rows, cols


def _eliminate(
    rows: Line, cols: Line, a: int, b: int
) -> tuple[tuple[int, int], Fraction, Line, Line]:
    """Fill cell (rows[a], cols[b]) greedily and drop the exhausted line(s)."""
    (i, s), (j, d) = rows[a], cols[b]
    x = min(s, d)
    rest_rows = rows[:a] + (((i, s - x),) if s > x else ()) + rows[a + 1 :]
    rest_cols = cols[:b] + (((j, d - x),) if d > x else ()) + cols[b + 1 :]
    return (i, j), x, rest_rows, rest_cols


@lru_cache(maxsize=256)
def _vertex_supports(rows: Line, cols: Line) -> frozenset[Support]:
    if not rows or not cols:
        return frozenset({frozenset()})
    found: set[Support] = set()
    for a in range(len(rows)):
        for b in range(len(cols)):
            cell, x, rest_rows, rest_cols = _eliminate(rows, cols, a, b)
            for tail in _vertex_supports(rest_rows, rest_cols):
                found.add(tail | {(cell, x)})
    return frozenset(found)


def enumerate_vertices(p: Law, q: Law) -> list[CouplingMatrix]:
    """
    All vertices of Π(p, q), sorted by their entries.

    Raises:
        SizeLimitError: when the space has more than 6 points.
    """
    n = p.space.size
    if n > MAX_VERTEX_POINTS:
        raise SizeLimitError("vertex enumeration", n, MAX_VERTEX_POINTS)
    rows, cols = _lines(p, q)
    space = p.space
    vertices = [
        make_chain((space, space), dict(support)) for support in _vertex_supports(rows, cols)
    ]
    vertices.sort(key=lambda v: v.entries)
    logger.debug("enumerated %d vertices for %s vs %s", len(vertices), p.describe(), q.describe())
    return vertices  # type: ignore[return-value]


def random_vertex(p: Law, q: Law, rng: np.random.Generator) -> CouplingMatrix:
    """A vertex of Π(p, q) from random leaf elimination."""
    rows, cols = _lines(p, q)
    mass: dict[tuple[int, int], Fraction] = {}
    while rows and cols:
        a = int(rng.integers(len(rows)))
        b = int(rng.integers(len(cols)))
        cell, x, rows, cols = _eliminate(rows, cols, a, b)
        mass[cell] = mass.get(cell, Fraction(0)) + x
    space = p.space
    return make_chain((space, space), mass)  # type: ignore[return-value]

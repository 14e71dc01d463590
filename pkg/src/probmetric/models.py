"""
Core data models for probmetric.

Defines the fundamental types: FinMetricSpace, Law, Interval, Piece,
RandomVariable, ChainLaw and CouplingMatrix.

Finite metric spaces stand in for Polish spaces, the sample space is the
half-open unit interval [0,1) with length measure, and every probability
and distance is an exact rational.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    InvalidLawError,
    InvalidRandomVariableError,
    InvalidSpaceError,
)

RationalLike = Union[Fraction, int, str]
PointRef = Union[int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an int, a Fraction or a "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Canonical text form: reduced "p/q", or "p" for integers."""
    return str(value)


# ── Metric spaces ────────────────────────────────────────────────────


@dataclass(frozen=True)
class FinMetricSpace:
    """
    A finite metric space with an exact-rational distance matrix.

    Attributes:
        points: Ordered point identifiers.
        dist: Square matrix of nonnegative rationals, dist[i][j] = d(points[i], points[j]).
    """

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.points)
        if n == 0:
            raise InvalidSpaceError("metric space must have at least one point")
        if len(set(self.points)) != n:
            raise InvalidSpaceError(f"duplicate point identifiers in {list(self.points)}")
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise InvalidSpaceError(f"distance matrix must be {n}x{n}")
        for i in range(n):
            if self.dist[i][i] != 0:
                raise InvalidSpaceError(
                    f"d({self.points[i]},{self.points[i]}) = {self.dist[i][i]} must be 0", (i, i, i)
                )
            for j in range(n):
                if self.dist[i][j] != self.dist[j][i]:
                    raise InvalidSpaceError(
                        f"asymmetric distance at ({self.points[i]},{self.points[j]})", (i, j, i)
                    )
                if i != j and self.dist[i][j] <= 0:
                    raise InvalidSpaceError(
                        f"d({self.points[i]},{self.points[j]}) must be positive", (i, j, j)
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.dist[i][k] > self.dist[i][j] + self.dist[j][k]:
                        a, b, c = self.points[i], self.points[j], self.points[k]
                        raise InvalidSpaceError(
                            f"triangle violation at ({a},{b},{c}): "
                            f"d({a},{c}) = {self.dist[i][k]} > "
                            f"{self.dist[i][j]} + {self.dist[j][k]}",
                            (i, j, k),
                        )

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, point: PointRef) -> int:
        """Resolve a point identifier (or pass through a valid index)."""
        if isinstance(point, int) and not isinstance(point, bool):
            if not 0 <= point < self.size:
                raise IndexError(f"point index {point} out of range for {self.size} points")
            return point
        try:
            return self.points.index(str(point))
        except ValueError:
            raise KeyError(f"unknown point '{point}'") from None

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    @cached_property
    def distance_values(self) -> tuple[Fraction, ...]:
        """Distinct positive distances, ascending."""
        return tuple(sorted({v for row in self.dist for v in row if v > 0}))

    @property
    def diameter(self) -> Fraction:
        return self.distance_values[-1] if self.distance_values else ZERO

    @property
    def min_positive_distance(self) -> Fraction | None:
        return self.distance_values[0] if self.distance_values else None

    def enlargement(self, subset: Iterable[int], radius: Fraction) -> frozenset[int]:
        """Closed enlargement {x : min_{a in A} d(x, a) <= radius}; empty for empty A."""
        members = tuple(subset)
        if not members:
            return frozenset()
        return frozenset(
            x for x in range(self.size) if min(self.dist[x][a] for a in members) <= radius
        )

    def to_dict(self) -> dict:
        return {
            "points": list(self.points),
            "dist": [[format_fraction(v) for v in row] for row in self.dist],
        }


def make_space(
    points: Sequence[PointRef], dist: Sequence[Sequence[RationalLike]]
) -> FinMetricSpace:
    """
    Build and validate a finite metric space.

    Raises:
        InvalidSpaceError: on any axiom violation; `.triple` names the failing indices.
    """
    return FinMetricSpace(
        points=tuple(str(p) for p in points),
        dist=tuple(tuple(to_fraction(v) for v in row) for row in dist),
    )


# ── Laws ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Law:
    """An exact-rational probability vector on the points of a space."""

    space: FinMetricSpace
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.space.size:
            raise InvalidLawError(
                f"law has {len(self.weights)} weights for {self.space.size} points"
            )
        if any(w < 0 for w in self.weights):
            raise InvalidLawError(f"negative weight in {self.describe()}")
        if sum(self.weights, ZERO) != 1:
            raise InvalidLawError(f"weights sum to {sum(self.weights, ZERO)}, not 1")

    @classmethod
    def from_weights(cls, space: FinMetricSpace, weights: Iterable[RationalLike]) -> Law:
        return cls(space=space, weights=tuple(to_fraction(w) for w in weights))

    @classmethod
    def dirac(cls, space: FinMetricSpace, point: PointRef) -> Law:
        i = space.index(point)
        return cls(space=space, weights=tuple(ONE if k == i else ZERO for k in range(space.size)))

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    def __len__(self) -> int:
        return len(self.weights)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def mass(self, subset: Iterable[int]) -> Fraction:
        return sum((self.weights[i] for i in set(subset)), ZERO)

    def as_chain(self) -> ChainLaw:
        return make_chain((self.space,), {(i,): w for i, w in enumerate(self.weights)})

    def describe(self) -> str:
        return "(" + ", ".join(format_fraction(w) for w in self.weights) + ")"


# ── Sample space and random variables ────────────────────────────────


@dataclass(frozen=True, order=True)
class Interval:
    """A half-open interval [start, end) inside [0,1) with rational endpoints."""

    start: Fraction
    end: Fraction

    def __post_init__(self) -> None:
        if not (0 <= self.start < self.end <= 1):
            raise InvalidRandomVariableError(
                f"interval [{self.start}, {self.end}) must satisfy 0 <= a < b <= 1"
            )

    @property
    def length(self) -> Fraction:
        return self.end - self.start

    def contains(self, omega: Fraction) -> bool:
        return self.start <= omega < self.end


@dataclass(frozen=True)
class Piece:
    """One constant piece of a step random variable."""

    interval: Interval
    point: int


@dataclass(frozen=True)
class RandomVariable:
    """
    A step function from the sample space [0,1) into a finite metric space.

    Pieces are stored sorted; they must be contiguous, start at 0 and end at 1,
    which makes them pairwise disjoint with union [0,1).
    """

    space: FinMetricSpace
    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise InvalidRandomVariableError("random variable needs at least one piece")
        cursor = ZERO
        for piece in self.pieces:
            if piece.interval.start != cursor:
                raise InvalidRandomVariableError(
                    f"pieces must partition [0,1): gap or overlap at {cursor}"
                )
            if not 0 <= piece.point < self.space.size:
                raise InvalidRandomVariableError(f"point index {piece.point} out of range")
            cursor = piece.interval.end
        if cursor != 1:
            raise InvalidRandomVariableError(f"pieces cover [0,{cursor}) instead of [0,1)")

    @classmethod
    def from_pieces(
        cls,
        space: FinMetricSpace,
        pieces: Iterable[tuple[RationalLike, RationalLike, PointRef]],
    ) -> RandomVariable:
        """Build from (a, b, point) triples in any order; points may be ids or indices."""
        built = sorted(
            (
                Piece(Interval(to_fraction(a), to_fraction(b)), space.index(point))
                for a, b, point in pieces
            ),
            key=lambda p: p.interval,
        )
        return cls(space=space, pieces=tuple(built))

    @classmethod
    def constant(cls, space: FinMetricSpace, point: PointRef) -> RandomVariable:
        return cls(space=space, pieces=(Piece(Interval(ZERO, ONE), space.index(point)),))

    @cached_property
    def _starts(self) -> list[Fraction]:
        return [p.interval.start for p in self.pieces]

    def value_at(self, omega: Fraction) -> int:
        """Point index taken at sample point omega in [0,1)."""
        if not 0 <= omega < 1:
            raise ValueError(f"sample point {omega} outside [0,1)")
        return self.pieces[bisect.bisect_right(self._starts, omega) - 1].point

    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(self._starts) + (ONE,)

    def canonical(self) -> RandomVariable:
        """Merge adjacent pieces that carry the same point."""
        merged: list[Piece] = []
        for piece in self.pieces:
            if merged and merged[-1].point == piece.point:
                last = merged.pop()
                piece = Piece(Interval(last.interval.start, piece.interval.end), piece.point)
            merged.append(piece)
        return RandomVariable(space=self.space, pieces=tuple(merged))

    def to_triples(self) -> list[list[str]]:
        return [
            [
                format_fraction(p.interval.start),
                format_fraction(p.interval.end),
                self.space.points[p.point],
            ]
            for p in self.pieces
        ]

    def describe(self) -> str:
        return ", ".join(f"{pt}↔[{a},{b})" for a, b, pt in self.to_triples())


# ── Joint laws ───────────────────────────────────────────────────────


Cell = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ChainLaw:
    """
    A probability measure on a finite product X_0 × ... × X_{k-1}.

    Stored sparsely: `entries` lists (index tuple, mass) for positive masses only,
    sorted lexicographically. Build instances with `make_chain`.
    """

    spaces: tuple[FinMetricSpace, ...]
    entries: tuple[tuple[Cell, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.spaces:
            raise InvalidLawError("a chain law needs at least one axis")
        previous: Cell | None = None
        total = ZERO
        for cell, mass in self.entries:
            if len(cell) != len(self.spaces):
                raise InvalidLawError(f"cell {cell} has wrong rank for {len(self.spaces)} axes")
            if any(not 0 <= c < s.size for c, s in zip(cell, self.spaces)):
                raise InvalidLawError(f"cell {cell} out of range")
            if mass <= 0:
                raise InvalidLawError(f"non-positive stored mass {mass} at {cell}")
            if previous is not None and cell <= previous:
                raise InvalidLawError("entries must be sorted and unique")
            previous = cell
            total += mass
        if total != 1:
            raise InvalidLawError(f"joint law has total mass {total}, not 1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainLaw):
            return NotImplemented
        return self.spaces == other.spaces and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.spaces, self.entries))

    @property
    def rank(self) -> int:
        return len(self.spaces)

    @cached_property
    def mass(self) -> dict[Cell, Fraction]:
        return dict(self.entries)

    def __getitem__(self, cell: Cell) -> Fraction:
        return self.mass.get(tuple(cell), ZERO)

    def marginal_law(self, axis: int) -> Law:
        weights = [ZERO] * self.spaces[axis].size
        for cell, m in self.entries:
            weights[cell[axis]] += m
        return Law(space=self.spaces[axis], weights=tuple(weights))

    @classmethod
    def product(cls, *laws: Law) -> ChainLaw:
        """Independent product law P_0 ⊗ ... ⊗ P_{k-1}."""
        mass: dict[Cell, Fraction] = {(): ONE}
        for law in laws:
            mass = {
                cell + (i,): m * w
                for cell, m in mass.items()
                for i, w in enumerate(law.weights)
                if w > 0
            }
        return make_chain(tuple(law.space for law in laws), mass)

    def to_dict(self) -> dict:
        return {
            "axes": [list(s.points) for s in self.spaces],
            "mass": [
                [[s.points[c] for c, s in zip(cell, self.spaces)], format_fraction(m)]
                for cell, m in self.entries
            ],
        }


@dataclass(frozen=True, eq=False)
class CouplingMatrix(ChainLaw):
    """A joint law on X × Y with matrix-style accessors."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.rank != 2:
            raise InvalidLawError(f"coupling matrix needs 2 axes, got {self.rank}")

    @property
    def row_space(self) -> FinMetricSpace:
        return self.spaces[0]

    @property
    def col_space(self) -> FinMetricSpace:
        return self.spaces[1]

    def entry(self, i: int, j: int) -> Fraction:
        return self.mass.get((i, j), ZERO)

    def row_law(self) -> Law:
        return self.marginal_law(0)

    def col_law(self) -> Law:
        return self.marginal_law(1)

    def rows(self) -> list[list[Fraction]]:
        return [
            [self.entry(i, j) for j in range(self.col_space.size)]
            for i in range(self.row_space.size)
        ]

    def support(self) -> list[tuple[int, int]]:
        return [(cell[0], cell[1]) for cell, _ in self.entries]

    @classmethod
    def from_rows(
        cls,
        row_space: FinMetricSpace,
        col_space: FinMetricSpace,
        rows: Sequence[Sequence[RationalLike]],
    ) -> CouplingMatrix:
        mass = {
            (i, j): to_fraction(v) for i, row in enumerate(rows) for j, v in enumerate(row)
        }
        return make_chain((row_space, col_space), mass)  # type: ignore[return-value]

    @classmethod
    def diagonal(cls, law: Law) -> CouplingMatrix:
        """The identity coupling of a law with itself."""
        return make_chain(  # type: ignore[return-value]
            (law.space, law.space), {(i, i): w for i, w in enumerate(law.weights)}
        )

    def mix(self, other: CouplingMatrix, s: Fraction) -> CouplingMatrix:
        """Convex combination (1 - s) * self + s * other."""
        mass: dict[Cell, Fraction] = {}
        for cell, m in self.entries:
            mass[cell] = mass.get(cell, ZERO) + (1 - s) * m
        for cell, m in other.entries:
            mass[cell] = mass.get(cell, ZERO) + s * m
        return make_chain(self.spaces, mass)  # type: ignore[return-value]

    def transpose(self) -> CouplingMatrix:
        return make_chain(  # type: ignore[return-value]
            (self.col_space, self.row_space), {(j, i): m for (i, j), m in self.entries}
        )


def make_chain(spaces: Sequence[FinMetricSpace], mass: Mapping[Cell, Fraction]) -> ChainLaw:
    """
    Canonical constructor for joint laws.

    Drops zero cells, sorts the rest, and returns a CouplingMatrix for rank 2.
    """
    entries = tuple(sorted((tuple(cell), m) for cell, m in mass.items() if m != 0))
    spaces = tuple(spaces)
    if len(spaces) == 2:
        return CouplingMatrix(spaces=spaces, entries=entries)
    return ChainLaw(spaces=spaces, entries=entries)

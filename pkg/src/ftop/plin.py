"""Piecewise-linear fuzzy sets on the unit interval, exact throughout.

Membership functions are continuous piecewise-linear maps ``[0,1] -> [0,1]``
given by breakpoints ``(x, y)`` with rational coordinates: the first x is 0,
the last is 1, x strictly increases, and the value between breakpoints is
the linear interpolation.  Min, max, and complement of such functions are
again piecewise-linear with rational breakpoints, because segment crossings
solve linear equations; everything here is computed exactly, with no
epsilon anywhere.

Construction always canonicalizes (interior breakpoints collinear with
their neighbours are dropped), so structural equality coincides with
pointwise equality and sets can be used as dict keys and topology members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .degrees import ONE, ZERO, as_degree

__all__ = ["PLFuzzySet"]

Breakpoint = tuple[Fraction, Fraction]


def _canonicalize(points: Sequence[Breakpoint]) -> tuple[Breakpoint, ...]:
    """Drop interior points collinear with their neighbours.

    An interior point is removable iff the segment from the last kept point
    to the next point passes through it; testing against the last *kept*
    point (not the raw predecessor) collapses whole collinear runs.
    """
    result: list[Breakpoint] = [points[0]]
    for index in range(1, len(points) - 1):
        x0, y0 = result[-1]
        x1, y1 = points[index]
        x2, y2 = points[index + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue
        result.append(points[index])
    result.append(points[-1])
    return tuple(result)


@dataclass(frozen=True)
class PLFuzzySet:
    """A continuous piecewise-linear membership function on ``[0, 1]``."""

    breakpoints: tuple[Breakpoint, ...]

    def __post_init__(self) -> None:
        points = self.breakpoints
        if len(points) < 2:
            raise ValueError("need at least the two endpoint breakpoints")
        if points[0][0] != ZERO or points[-1][0] != ONE:
            raise ValueError("breakpoints must start at x=0 and end at x=1")
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x1 <= x0:
                raise ValueError(f"x-coordinates must strictly increase: {x0} then {x1}")
        for x, y in points:
            if not isinstance(x, Fraction) or not isinstance(y, Fraction):
                raise ValueError(f"breakpoint ({x!r}, {y!r}) is not exact-rational")
            if y < ZERO or y > ONE:
                raise ValueError(f"membership value {y} outside [0, 1]")
        canonical = _canonicalize(points)
        if canonical != points:
            object.__setattr__(self, "breakpoints", canonical)

    @classmethod
    def from_breakpoints(cls, pairs: Iterable[tuple[object, object]]) -> "PLFuzzySet":
        """Build from ``(x, y)`` pairs of ints, Fractions, or "p/q" strings."""
        return cls(tuple((as_degree(x), as_degree(y)) for x, y in pairs))

    @classmethod
    def constant(cls, value: object) -> "PLFuzzySet":
        degree = as_degree(value)
        return cls(((ZERO, degree), (ONE, degree)))

    @classmethod
    def zero(cls) -> "PLFuzzySet":
        return cls.constant(0)

    @classmethod
    def one(cls) -> "PLFuzzySet":
        return cls.constant(1)

    def at(self, x: Fraction | int | str) -> Fraction:
        """Evaluate at a rational point by exact linear interpolation."""
        x = as_degree(x)  # the domain is [0, 1], same range as degrees
        points = self.breakpoints
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x0 <= x <= x1:
                if x == x0:
                    return y0
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError("unreachable: breakpoints cover [0, 1]")

    def grid(self) -> tuple[Fraction, ...]:
        """The x-coordinates of the breakpoints."""
        return tuple(x for x, _ in self.breakpoints)

    def _merged_grid(self, other: "PLFuzzySet") -> list[Fraction]:
        """Union of both grids plus any interior segment crossings.

        Between consecutive merged x-coordinates both functions are linear,
        so the difference changes sign inside a cell only if it has strictly
        opposite signs at the cell ends; the crossing then solves a linear
        equation and is rational.
        """
        xs = sorted(set(self.grid()) | set(other.grid()))
        crossings: list[Fraction] = []
        for x0, x1 in zip(xs, xs[1:]):
            d0 = self.at(x0) - other.at(x0)
            d1 = self.at(x1) - other.at(x1)
            if (d0 > 0 and d1 < 0) or (d0 < 0 and d1 > 0):
                t = d0 / (d0 - d1)
                crossings.append(x0 + t * (x1 - x0))
        return sorted(set(xs) | set(crossings))

    def _pointwise(self, other: "PLFuzzySet", op) -> "PLFuzzySet":
        self._require_pl(other)
        xs = self._merged_grid(other)
        return PLFuzzySet(tuple((x, op(self.at(x), other.at(x))) for x in xs))

    def meet(self, other: "PLFuzzySet") -> "PLFuzzySet":
        """Pointwise minimum."""
        return self._pointwise(other, min)

    def join(self, other: "PLFuzzySet") -> "PLFuzzySet":
        """Pointwise maximum."""
        return self._pointwise(other, max)

    def join_many(self, others: Sequence["PLFuzzySet"]) -> "PLFuzzySet":
        result = self
        for other in others:
            result = result.join(other)
        return result

    def meet_many(self, others: Sequence["PLFuzzySet"]) -> "PLFuzzySet":
        result = self
        for other in others:
            result = result.meet(other)
        return result

    def complement(self) -> "PLFuzzySet":
        return PLFuzzySet(tuple((x, ONE - y) for x, y in self.breakpoints))

    def leq(self, other: "PLFuzzySet") -> bool:
        """Pointwise order, decided exactly.

        Checking the merged breakpoints suffices: both functions are linear
        on every merged segment, and a linear inequality on a segment holds
        iff it holds at both ends.
        """
        self._require_pl(other)
        xs = sorted(set(self.grid()) | set(other.grid()))
        return all(self.at(x) <= other.at(x) for x in xs)

    def is_zero(self) -> bool:
        return all(y == ZERO for _, y in self.breakpoints)

    def bottom(self) -> "PLFuzzySet":
        return PLFuzzySet.zero()

    def top(self) -> "PLFuzzySet":
        return PLFuzzySet.one()

    def sort_key(self) -> tuple[Breakpoint, ...]:
        return self.breakpoints

    def _require_pl(self, other: "PLFuzzySet") -> None:
        if not isinstance(other, PLFuzzySet):
            raise TypeError(f"expected PLFuzzySet, got {type(other).__name__}")

    def __repr__(self) -> str:
        inside = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PLFuzzySet([{inside}])"

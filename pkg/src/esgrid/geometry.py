"""Exact arithmetic kernel: integer points, orientation/slope predicates and
exact arithmetic in Z[sqrt(3)].

Everything here works on arbitrary-precision Python integers; no floating
point is ever consulted for a predicate result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import VerticalLine

# orientation() results
LEFT_TURN = 1
COLLINEAR = 0
RIGHT_TURN = -1

# point_side() results
ABOVE = 1
ON = 0
BELOW = -1

# comparison results (slope_compare, quad_compare)
LESS = -1
EQUAL = 0
GREATER = 1


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Line:
    """Line through two distinct grid points, canonicalized left-endpoint-first."""

    p: Point
    q: Point

    def __post_init__(self):
        p, q = self.p, self.q
        if p == q:
            raise ValueError("line endpoints must be distinct")
        if (p.x, p.y) > (q.x, q.y):
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    @property
    def is_vertical(self) -> bool:
        return self.p.x == self.q.x

    def translate(self, dx: int, dy: int) -> "Line":
        return Line(Point(self.p.x + dx, self.p.y + dy),
                    Point(self.q.x + dx, self.q.y + dy))


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p).

    LEFT_TURN (+1) if r lies to the left of the directed line p->q,
    RIGHT_TURN (-1) if to the right, COLLINEAR (0) otherwise.
    """
    cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (cross > 0) - (cross < 0)


def slope_compare(l1: Line, l2: Line) -> int:
    """Exact slope comparison of two non-vertical lines, by cross-multiplication."""
    if l1.is_vertical or l2.is_vertical:
        raise VerticalLine("slope of a vertical line is undefined")
    dy1 = l1.q.y - l1.p.y
    dx1 = l1.q.x - l1.p.x
    dy2 = l2.q.y - l2.p.y
    dx2 = l2.q.x - l2.p.x
    # canonical form guarantees dx > 0
    lhs = dy1 * dx2
    rhs = dy2 * dx1
    return (lhs > rhs) - (lhs < rhs)


def point_side(p: Point, l: Line) -> int:
    """Whether p is strictly above, on, or strictly below the infinite line l."""
    if l.is_vertical:
        raise VerticalLine("above/below is undefined for a vertical line")
    # l.p.x < l.q.x after canonicalization, so left turn means above
    return orientation(l.p, l.q, p)


class QuadValue(NamedTuple):
    """An exact element a + b*sqrt(3) of Z[sqrt(3)]."""

    a: int
    b: int

    def __add__(self, other: "QuadValue") -> "QuadValue":
        return QuadValue(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadValue") -> "QuadValue":
        return QuadValue(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadValue") -> "QuadValue":
        return QuadValue(self.a * other.a + 3 * self.b * other.b,
                         self.a * other.b + self.b * other.a)

    def __neg__(self) -> "QuadValue":
        return QuadValue(-self.a, -self.b)


def quad_sign(u: QuadValue) -> int:
    """Sign of the real value a + b*sqrt(3), by case analysis on (sign a, sign b)."""
    a, b = u
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 vs 3 b^2, sign decided by the larger magnitude
    d = a * a - 3 * b * b
    if d == 0:
        # a^2 = 3 b^2 has no solution with a, b != 0 (sqrt(3) irrational)
        raise AssertionError("unreachable: 3 is not a perfect square ratio")
    if a > 0:  # b < 0
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def quad_compare(u: QuadValue, v: QuadValue) -> int:
    """Exact ordering of two Z[sqrt(3)] values."""
    return quad_sign(QuadValue(u.a - v.a, u.b - v.b))


def quad_floor(u: QuadValue) -> int:
    """Largest integer <= a + b*sqrt(3), via exact integer square root."""
    a, b = u
    if b == 0:
        return a
    if b > 0:
        return a + math.isqrt(3 * b * b)
    # floor(-x) = -ceil(x); b*sqrt(3) is irrational here
    return a - math.isqrt(3 * b * b) - 1


def quad_ceil(u: QuadValue) -> int:
    """Smallest integer >= a + b*sqrt(3); exact for all integer a, b."""
    if u.b == 0:
        return u.a
    return quad_floor(u) + 1


QUAD_ONE_PLUS_SQRT3 = QuadValue(1, 1)
QUAD_TWO_PLUS_SQRT3 = QuadValue(2, 1)

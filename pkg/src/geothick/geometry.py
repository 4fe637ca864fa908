"""Exact planar predicates over rationals.

Coordinates are ``int`` or ``fractions.Fraction``; nothing in this module ever
converts to floating point.  Orientation is mathematical: counterclockwise
turns are positive.
"""
from __future__ import annotations

from enum import Enum, IntEnum
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .errors import DegenerateInputError, NoReflexAngleError

Rational = Union[int, Fraction]


class Point(NamedTuple):
    x: Rational
    y: Rational

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor: Rational) -> "Point":
        return Point(self.x * factor, self.y * factor)


class Segment(NamedTuple):
    a: Point
    b: Point


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class SegmentRelation(Enum):
    DISJOINT = "Disjoint"
    PROPER_CROSSING = "ProperCrossing"
    SHARED_ENDPOINT = "SharedEndpoint"
    TOUCHING = "Touching"
    OVERLAPPING = "Overlapping"


class HullLocation(Enum):
    INSIDE = "Inside"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


def parse_rational(text) -> Rational:
    """Parse ``"p/q"`` or ``"p"`` (ints pass through unchanged)."""
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    try:
        value = Fraction(str(text).strip())
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {text!r}") from exc
    return value.numerator if value.denominator == 1 else value


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def cross(o: Point, a: Point, b: Point) -> Rational:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o: Point, a: Point, b: Point) -> Rational:
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.COUNTERCLOCKWISE
    if c < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def on_segment_interior(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on segment ab strictly between its endpoints."""
    if cross(a, b, p) != 0 or p == a or p == b:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segment_relation(s: Segment, t: Segment) -> SegmentRelation:
    a, b = s
    c, d = t
    o1 = _sign(cross(a, b, c))
    o2 = _sign(cross(a, b, d))
    o3 = _sign(cross(c, d, a))
    o4 = _sign(cross(c, d, b))

    if o1 == o2 == o3 == o4 == 0:
        # collinear: compare extents along the dominant axis
        key = (lambda p: p.x) if a.x != b.x else (lambda p: p.y)
        lo1, hi1 = sorted((key(a), key(b)))
        lo2, hi2 = sorted((key(c), key(d)))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo < hi:
            return SegmentRelation.OVERLAPPING
        if lo == hi:
            return SegmentRelation.SHARED_ENDPOINT
        return SegmentRelation.DISJOINT

    if o1 * o2 < 0 and o3 * o4 < 0:
        return SegmentRelation.PROPER_CROSSING
    if a == c or a == d or b == c or b == d:
        return SegmentRelation.SHARED_ENDPOINT
    if (on_segment_interior(c, a, b) or on_segment_interior(d, a, b)
            or on_segment_interior(a, c, d) or on_segment_interior(b, c, d)):
        return SegmentRelation.TOUCHING
    return SegmentRelation.DISJOINT


def properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Fast path for the ProperCrossing test alone."""
    o1 = cross(a, b, c)
    o2 = cross(a, b, d)
    if (o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0) or o1 == 0 or o2 == 0:
        return False
    o3 = cross(c, d, a)
    o4 = cross(c, d, b)
    return (o3 > 0 > o4) or (o3 < 0 < o4)


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Counterclockwise hull vertices, starting from the lowest-leftmost point.

    Points in the interior of hull edges are dropped.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def in_strictly_convex_position(points: Sequence[Point]) -> bool:
    if len(points) < 3 or len(set(points)) != len(points):
        return False
    return len(convex_hull(points)) == len(points)


def point_vs_hull(p: Point, hull: Sequence[Point]) -> HullLocation:
    if len(hull) < 3:
        raise DegenerateInputError("hull needs at least three vertices")
    on_line = False
    for i in range(len(hull)):
        c = cross(hull[i], hull[(i + 1) % len(hull)], p)
        if c < 0:
            return HullLocation.OUTSIDE
        if c == 0:
            on_line = True
    return HullLocation.BOUNDARY if on_line else HullLocation.INSIDE


def reflex_gap_order(apex: Point, targets: Sequence[Point]) -> tuple[int, int, int]:
    """Clockwise order of the three rays apex->target, starting after the reflex gap.

    The reflex gap is the angular sector larger than 180 degrees between two
    consecutive rays.  The first ray returned is the most counterclockwise
    one, i.e. the first ray met when sweeping clockwise out of the gap.
    """
    if len(targets) != 3:
        raise DegenerateInputError("exactly three targets required")
    if any(t == apex for t in targets):
        raise DegenerateInputError("target coincides with apex")
    for i in range(3):
        for j in range(i + 1, 3):
            if cross(apex, targets[i], targets[j]) == 0:
                raise DegenerateInputError("two targets are collinear with the apex")

    # No pair is collinear with the apex, so a reflex gap exists exactly when
    # one ray has the other two on its clockwise side.
    for first in range(3):
        others = [i for i in range(3) if i != first]
        if all(cross(apex, targets[first], targets[o]) < 0 for o in others):
            second, third = others
            if cross(apex, targets[second], targets[third]) > 0:
                second, third = third, second
            return first, second, third
    raise NoReflexAngleError("apex lies inside the triangle of its targets")


def angle_sum_below_pi(apex1: Point, ray1a: Point, ray1b: Point,
                       apex2: Point, ray2a: Point, ray2b: Point) -> bool:
    """Decide angle(ray1a, apex1, ray1b) + angle(ray2a, apex2, ray2b) < 180 degrees.

    Uses theta1 + theta2 < pi  <=>  cos(theta1) + cos(theta2) > 0, with the
    square roots of the normalised dot products removed by sign-aware squaring.
    """
    terms = []
    for apex, u, v in ((apex1, ray1a, ray1b), (apex2, ray2a, ray2b)):
        if u == apex or v == apex:
            raise DegenerateInputError("ray endpoint coincides with apex")
        if cross(apex, u, v) == 0:
            raise DegenerateInputError("zero or straight angle")
        du = dot(apex, u, u)
        dv = dot(apex, v, v)
        terms.append((dot(apex, u, v), du * dv))
    (d1, q1), (d2, q2) = terms
    # sign of d1/sqrt(q1) + d2/sqrt(q2) equals sign of d1*sqrt(q2) + d2*sqrt(q1)
    if d1 >= 0 and d2 >= 0:
        return d1 > 0 or d2 > 0
    if d1 <= 0 and d2 <= 0:
        return False
    if d1 > 0:
        return d1 * d1 * q2 > d2 * d2 * q1
    return d2 * d2 * q1 > d1 * d1 * q2

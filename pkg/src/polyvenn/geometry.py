"""Exact rational plane geometry: points, predicates, segments, polygons.

All coordinates are `fractions.Fraction` (aliased `Rat`); every predicate is
decided by exact integer arithmetic, so there is no epsilon anywhere in this
module.  Degenerate outcomes (collinear, boundary, overlap) are reported as
first-class results and never silently resolved.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

Rat = Fraction

# orientation() results
LEFT = 1
COLLINEAR = 0
RIGHT = -1

# point_in_polygon() results
INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def rat(value) -> Rat:
    """Convert int / decimal string / Fraction to an exact Rat.

    Decimal strings convert exactly (denominator a power of ten); floats are
    rejected so no binary rounding can sneak in.
    """
    if isinstance(value, float):
        raise TypeError("refusing inexact float %r; pass a decimal string" % value)
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Rat
    y: Rat

    def translated(self, dx: Rat, dy: Rat) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x, y) -> Point:
    return Point(rat(x), rat(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a): LEFT, COLLINEAR or RIGHT."""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if cross > 0:
        return LEFT
    if cross < 0:
        return RIGHT
    return COLLINEAR


def on_segment(p: Point, s: Segment) -> bool:
    """True iff p lies on s (endpoints included)."""
    if orientation(s.a, s.b, p) != COLLINEAR:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


@dataclass(frozen=True)
class SegmentIntersection:
    """Outcome of intersecting two segments.

    kind is "empty", "point" or "overlap".  For "point", t1 and t2 are the
    exact parameters of the intersection along each segment (0 = a, 1 = b),
    so endpoint contact is distinguishable from a proper interior crossing.
    """

    kind: str
    point: Point | None = None
    t1: Rat | None = None
    t2: Rat | None = None

    @property
    def is_interior_interior(self) -> bool:
        return (self.kind == "point"
                and 0 < self.t1 < 1 and 0 < self.t2 < 1)

    @property
    def touches_endpoint(self) -> bool:
        return (self.kind == "point"
                and (self.t1 in (0, 1) or self.t2 in (0, 1)))


def segment_intersection(s1: Segment, s2: Segment) -> SegmentIntersection:
    """Exact classification of the intersection of two segments."""
    d1x, d1y = s1.b.x - s1.a.x, s1.b.y - s1.a.y
    d2x, d2y = s2.b.x - s2.a.x, s2.b.y - s2.a.y
    ex, ey = s2.a.x - s1.a.x, s2.a.y - s1.a.y
    denom = d1x * d2y - d1y * d2x

    if denom != 0:
        t1 = (ex * d2y - ey * d2x) / denom
        t2 = (ex * d1y - ey * d1x) / denom
        if 0 <= t1 <= 1 and 0 <= t2 <= 1:
            p = Point(s1.a.x + t1 * d1x, s1.a.y + t1 * d1y)
            return SegmentIntersection("point", p, t1, t2)
        return SegmentIntersection("empty")

    # Parallel.  Distinct lines cannot meet.
    if ex * d1y - ey * d1x != 0:
        return SegmentIntersection("empty")

    # Collinear: project s2's endpoints onto s1's parameter line.
    dd = d1x * d1x + d1y * d1y
    u0 = (ex * d1x + ey * d1y) / dd
    u1 = ((s2.b.x - s1.a.x) * d1x + (s2.b.y - s1.a.y) * d1y) / dd
    lo, hi = min(u0, u1), max(u0, u1)
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return SegmentIntersection("empty")
    if lo == hi:
        p = Point(s1.a.x + lo * d1x, s1.a.y + lo * d1y)
        t2 = Fraction(0) if p == s2.a else Fraction(1)
        return SegmentIntersection("point", p, lo, t2)
    return SegmentIntersection("overlap")


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with counter-clockwise corners.

    Construction does not validate; call validate_convex() (or the
    require_convex() raising variant) at trust boundaries.
    """

    corners: tuple[Point, ...]
    label: str = ""

    @property
    def k(self) -> int:
        return len(self.corners)

    def sides(self) -> list[Segment]:
        cs = self.corners
        return [Segment(cs[i], cs[(i + 1) % len(cs)]) for i in range(len(cs))]

    def translated(self, dx: Rat, dy: Rat) -> "ConvexPolygon":
        return ConvexPolygon(tuple(c.translated(dx, dy) for c in self.corners),
                             self.label)

    def with_corner(self, index: int, corner: Point) -> "ConvexPolygon":
        cs = list(self.corners)
        cs[index] = corner
        return ConvexPolygon(tuple(cs), self.label)


def polygon(coords, label: str = "") -> ConvexPolygon:
    return ConvexPolygon(tuple(pt(x, y) for x, y in coords), label)


def validate_convex(p: ConvexPolygon) -> str | None:
    """Return None if p is a valid strictly convex CCW polygon, else the
    first violation found, as a description naming the offending corners."""
    cs = p.corners
    k = len(cs)
    if k < 3:
        return f"polygon needs at least 3 corners, got {k}"
    if len(set(cs)) != k:
        dup = next(c for i, c in enumerate(cs) if c in cs[:i])
        return f"duplicate corner {dup}"
    for i in range(k):
        a, b, c = cs[i], cs[(i + 1) % k], cs[(i + 2) % k]
        side = orientation(a, b, c)
        if side == COLLINEAR:
            return f"collinear corner triple at index {i}: {a}, {b}, {c}"
        if side == RIGHT:
            return (f"reflex or clockwise turn at index {i}: {a}, {b}, {c} "
                    "(corners must wind counter-clockwise)")
    return None


def require_convex(p: ConvexPolygon) -> ConvexPolygon:
    problem = validate_convex(p)
    if problem is not None:
        raise ValueError(f"invalid polygon {p.label!r}: {problem}")
    return p


def point_in_polygon(point: Point, p: ConvexPolygon) -> str:
    """Exact INSIDE / BOUNDARY / OUTSIDE classification against a valid
    convex CCW polygon."""
    on_line = False
    cs = p.corners
    for i in range(len(cs)):
        o = orientation(cs[i], cs[(i + 1) % len(cs)], point)
        if o == RIGHT:
            return OUTSIDE
        if o == COLLINEAR:
            on_line = True
    return BOUNDARY if on_line else INSIDE


def _angle_half(d: tuple[Rat, Rat]) -> int:
    # 0 for directions with angle in [0, pi), 1 for [pi, 2*pi)
    x, y = d
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def angular_compare(d1: tuple[Rat, Rat], d2: tuple[Rat, Rat]) -> int:
    """Order nonzero direction vectors counter-clockwise from the positive
    x-axis; exact quadrant-then-cross-product comparison, no trigonometry."""
    h1, h2 = _angle_half(d1), _angle_half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


@functools.lru_cache(maxsize=None)
def rational_cos_sin(i: int, n: int, digits: int) -> tuple[Rat, Rat]:
    """Rational approximations of cos(2*pi*i/n), sin(2*pi*i/n), rounded to
    the nearest multiple of 10**-digits."""
    if n < 1 or not 0 <= i < n or digits < 1:
        raise ValueError(f"invalid rotation arguments i={i}, n={n}, digits={digits}")
    scale = 10 ** digits
    with mpmath.workdps(digits + 20):
        theta = 2 * mpmath.pi * i / n
        c = int(mpmath.nint(mpmath.cos(theta) * scale))
        s = int(mpmath.nint(mpmath.sin(theta) * scale))
    return Fraction(c, scale), Fraction(s, scale)


def rotate_about_origin(p: ConvexPolygon, i: int, n: int, digits: int = 12) -> ConvexPolygon:
    """Rotate p by 2*pi*i/n about the origin using one fixed rational
    cos/sin pair for the base angle 2*pi/n.

    Copy i is produced by the exact i-th power of the base rotation matrix,
    so a family built from copies 0..n-1 is exactly invariant under the base
    rotation: symmetry holds by construction on the rationals, not merely up
    to rounding.
    """
    if n < 1 or not 0 <= i < n:
        raise ValueError(f"rotation index i={i} out of range for n={n}")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if i == 0:
        return p
    c1, s1 = rational_cos_sin(1, n, digits)
    c, s = c1, s1
    for _ in range(i - 1):
        c, s = c * c1 - s * s1, c * s1 + s * c1
    corners = tuple(Point(c * q.x - s * q.y, s * q.x + c * q.y)
                    for q in p.corners)
    return ConvexPolygon(corners, p.label)

"""Hand-built polygon families used across the test suite.

Expected values for the [DERIVED] cases were frozen from manual enumeration
(region counts by hand) and are cross-checked against the grid-sampling
census oracle in the acceptance suite.
"""

from __future__ import annotations

from polyvenn.arrangement import PolygonFamily, family_of
from polyvenn.geometry import ConvexPolygon, polygon, rotate_about_origin


TABLE2_CORNERS = [("-0.446", "0.000"), ("-0.123", "-0.433"),
                  ("0.699", "0.061"), ("-0.081", "0.451")]


def table2_generator() -> ConvexPolygon:
    return polygon(TABLE2_CORNERS, "C1")


def jittered_table2(seed: int, magnitude=None) -> ConvexPolygon:
    """Table 2 generator with each corner nudged by at most `magnitude`
    (default 0.005) on the search grid; seed 2 is known to break the diagram."""
    import random
    from fractions import Fraction

    from polyvenn.geometry import ConvexPolygon, Point
    from polyvenn.search import _snap

    if magnitude is None:
        magnitude = Fraction(1, 200)
    rng = random.Random(seed)
    corners = []
    for c in table2_generator().corners:
        dx = _snap(Fraction(rng.uniform(-float(magnitude), float(magnitude))))
        dy = _snap(Fraction(rng.uniform(-float(magnitude), float(magnitude))))
        corners.append(Point(c.x + dx, c.y + dy))
    return ConvexPolygon(tuple(corners), "C1")


def two_overlapping_squares() -> PolygonFamily:
    # squares (0,0)-(2,2) and (1,1)-(3,3); boundaries cross at (1,2), (2,1)
    return family_of([
        polygon([(0, 0), (2, 0), (2, 2), (0, 2)], "A"),
        polygon([(1, 1), (3, 1), (3, 3), (1, 3)], "B"),
    ])


def one_square() -> PolygonFamily:
    return family_of([polygon([(0, 0), (2, 0), (2, 2), (0, 2)], "A")])


def two_disjoint_squares() -> PolygonFamily:
    return family_of([
        polygon([(0, 0), (2, 0), (2, 2), (0, 2)], "A"),
        polygon([(5, 0), (7, 0), (7, 2), (5, 2)], "B"),
    ])


def nested_squares() -> PolygonFamily:
    return family_of([
        polygon([(0, 0), (10, 0), (10, 10), (0, 10)], "A"),
        polygon([(4, 4), (6, 4), (6, 6), (4, 6)], "B"),
    ])


def triple_point_triangles() -> PolygonFamily:
    """Three triangles whose boundaries all pass through the origin: one
    degree-6 vertex."""
    return family_of([
        polygon([(-5, 0), (0, -5), (5, 0)], "A"),
        polygon([(0, 6), (0, -4), (5, 3)], "B"),
        polygon([(-4, -4), (4, 4), (-5, 2)], "C"),
    ])


def nonsimple_venn_quads() -> PolygonFamily:
    """A non-simple 3-Venn of quadrilaterals.

    Two diamonds crossing four times, plus a quad whose long side passes
    exactly through two of those crossings: the diagram has two degree-6
    vertices yet all 8 regions appear exactly once.
    """
    return family_of([
        polygon([(0, 35), (-14, 0), (0, -35), (14, 0)], "A"),
        polygon([(35, 0), (0, 14), (-35, 0), (0, -14)], "B"),
        polygon([(42, 0), (0, 42), (-14, 14), (14, -14)], "C"),
    ])


def degree_eight_quads() -> PolygonFamily:
    """Four quadrilaterals, each with one side through the origin at a
    distinct slope (0, infinity, +1, -1): one degree-8 vertex where four
    curves cross, all other vertices degree 4."""
    return family_of([
        polygon([(-10, 0), (-8, -6), (8, -6), (10, 0)], "A"),
        polygon([(0, -10), (5, -8), (5, 8), (0, 10)], "B"),
        polygon([(-7, -7), (-2, -10), (12, 4), (7, 7)], "C"),
        polygon([(7, -7), (-7, 7), (-12, 3), (2, -11)], "D"),
    ])


def three_venn_triangles(digits: int = 4) -> PolygonFamily:
    """A simple symmetric 3-Venn of triangles: one generator rotated twice
    by 120 degrees.  The generator keeps all crossing angles wide, so every
    region stays chunky at grid-oracle resolution, and the 4-digit rotation
    keeps coordinates small enough for the int64 grid arithmetic."""
    gen = polygon([("-1.0", "-0.4"), ("1.2", "-0.4"), ("0.1", "1.2")])
    polys = [ConvexPolygon(rotate_about_origin(gen, i, 3, digits=digits).corners,
                           f"C{i+1}")
             for i in range(3)]
    return family_of(polys, labels=False)


def seven_disjoint_quads() -> PolygonFamily:
    quads = []
    for i in range(7):
        x = 10 * i
        quads.append(polygon([(x, 0), (x + 2, 0), (x + 3, 3), (x, 2)], f"C{i+1}"))
    return family_of(quads, labels=False)


def shared_corner_squares() -> PolygonFamily:
    # corner (2,2) of A lies on B's boundary (it is B's corner too)
    return family_of([
        polygon([(0, 0), (2, 0), (2, 2), (0, 2)], "A"),
        polygon([(2, 2), (4, 2), (4, 4), (2, 4)], "B"),
    ])


def collinear_overlap_squares() -> PolygonFamily:
    # bottom sides share the subsegment (1,0)-(2,0)
    return family_of([
        polygon([(0, 0), (2, 0), (2, 2), (0, 2)], "A"),
        polygon([(1, 0), (3, 0), (3, 2), (1, 2)], "B"),
    ])

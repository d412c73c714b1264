"""Shared random generators for the test suite.

All generators take an explicit random.Random so every test is seeded and
reproducible.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction

from polyvenn.geometry import (
    ConvexPolygon,
    Point,
    angular_compare,
    validate_convex,
)


def random_rat(rng: random.Random, lo: int, hi: int, den: int = 1000) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_convex_polygon(rng: random.Random, k: int, *, span: int = 20,
                          den: int = 100, label: str = "") -> ConvexPolygon:
    """Random strictly convex k-gon with exact rational corners.

    Uses the edge-vector construction: k non-parallel vectors summing to
    zero, sorted by exact angle, accumulated into corners.
    """
    while True:
        vecs = [(random_rat(rng, -span, span, den), random_rat(rng, -span, span, den))
                for _ in range(k - 1)]
        sx = sum(v[0] for v in vecs)
        sy = sum(v[1] for v in vecs)
        vecs.append((-sx, -sy))
        if any(v == (0, 0) for v in vecs):
            continue
        vecs.sort(key=functools.cmp_to_key(angular_compare))
        # parallel edge vectors would give a collinear corner triple
        if any(angular_compare(vecs[i], vecs[(i + 1) % k]) == 0 for i in range(k)):
            continue
        x = random_rat(rng, -span, span, den)
        y = random_rat(rng, -span, span, den)
        corners = []
        for vx, vy in vecs:
            corners.append(Point(x, y))
            x, y = x + vx, y + vy
        poly = ConvexPolygon(tuple(corners), label)
        if validate_convex(poly) is None:
            return poly


def random_triangle_family(rng: random.Random, n: int = 7, *, span: int = 20,
                           den: int = 100) -> list[ConvexPolygon]:
    return [random_convex_polygon(rng, 3, span=span, den=den, label=f"C{i+1}")
            for i in range(n)]

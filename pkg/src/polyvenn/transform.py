"""Degeneracy removal and vertex splitting by small exact translations.

Splitting translates a whole polygon: the move is chosen orthogonal to one of
its sides through the targeted high-degree vertex, which peels that curve off
the coincident crossing while trivially preserving convexity.  Step validity
is established a posteriori: the rebuilt arrangement must keep every region
that existed before the step and must not lose faces; on failure the step is
halved and retried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import (
    Arrangement,
    DegeneracyError,
    PolygonFamily,
    build,
    degree_histogram,
)
from .classify import census
from .geometry import ConvexPolygon, Point, Rat, Segment, on_segment


class TransformError(Exception):
    """Perturbation or splitting could not finish within its retry budget."""


@dataclass
class SplitReport:
    degrees_before: dict[int, int]
    degrees_after: dict[int, int]
    F_before: int
    F_after: int
    translations: list[tuple[str, tuple[Rat, Rat]]] = field(default_factory=list)
    still_independent_family: bool = False

    @property
    def new_faces(self) -> int:
        return self.F_after - self.F_before


def _random_offset(rng: random.Random, epsilon: Rat) -> tuple[Rat, Rat]:
    # |dx|, |dy| <= epsilon/2 keeps the euclidean norm under epsilon
    den = 997
    dx = epsilon * Fraction(rng.randint(-den, den), 2 * den)
    dy = epsilon * Fraction(rng.randint(-den, den), 2 * den)
    return dx, dy


def perturb(family: PolygonFamily, epsilon: Rat, seed: int,
            max_attempts: int = 64) -> PolygonFamily:
    """Translate offending polygons by random rational vectors of norm at
    most epsilon until the family is in general position.

    A family that already builds is returned unchanged.  Offsets are applied
    to the original polygons, so no curve ever drifts more than epsilon.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    rng = random.Random(seed)
    offsets: dict[int, tuple[Rat, Rat]] = {}
    current = family
    for _ in range(max_attempts):
        try:
            build(current)
            return current
        except DegeneracyError as err:
            victim_label = rng.choice(err.curves)
            victim = family.labels.index(victim_label)
            offsets[victim] = _random_offset(rng, epsilon)
            polys = list(family.polygons)
            for idx, (dx, dy) in offsets.items():
                polys[idx] = polys[idx].translated(dx, dy)
            current = PolygonFamily(tuple(polys))
    raise TransformError(
        f"could not reach general position within {max_attempts} attempts")


def _max_degree_vertex(arr: Arrangement):
    worst = None
    for v in arr.vertices:
        if v.degree > 4:
            key = (-v.degree, v.point.x, v.point.y)
            if worst is None or key < (-worst.degree, worst.point.x, worst.point.y):
                worst = v
    return worst


def _degree_excess(arr: Arrangement) -> int:
    return sum(v.degree // 2 - 2 for v in arr.vertices if v.degree > 4)


def _side_through(poly: ConvexPolygon, p: Point) -> Segment:
    for s in poly.sides():
        if on_segment(p, s):
            return s
    raise TransformError(f"no side of {poly.label!r} passes through {p}")


def split_to_simple(family: PolygonFamily, epsilon: Rat, seed: int,
                    max_step_retries: int = 48) -> tuple[PolygonFamily, SplitReport]:
    """Translate curves off high-degree vertices until every vertex has
    degree four.

    Per step: the curve count at a chosen max-degree vertex must drop, the
    face count must not decrease, and every sign vector present before the
    step must survive it; otherwise the translation is halved and retried.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    rng = random.Random(seed)
    arr = build(family)
    report = SplitReport(
        degrees_before=degree_histogram(arr),
        degrees_after=degree_histogram(arr),
        F_before=arr.F,
        F_after=arr.F,
    )

    current, cur_arr = family, arr
    while True:
        target = _max_degree_vertex(cur_arr)
        if target is None:
            break
        vectors_before = set(census(cur_arr).by_vector)
        excess_before = _degree_excess(cur_arr)
        incident = sorted({cur_arr.half_edges[h].curve
                           for h in cur_arr.vertices[target.id].out})
        step = epsilon
        for attempt in range(max_step_retries):
            curve = rng.choice(incident)
            side = _side_through(current.polygons[curve], target.point)
            dx, dy = side.b.x - side.a.x, side.b.y - side.a.y
            orient = rng.choice((-1, 1))
            s = step / (abs(dx) + abs(dy)) * orient
            move = (-dy * s, dx * s)
            polys = list(current.polygons)
            polys[curve] = polys[curve].translated(*move)
            candidate = PolygonFamily(tuple(polys))
            try:
                cand_arr = build(candidate)
            except DegeneracyError:
                step /= 2
                continue
            if (cand_arr.F < cur_arr.F
                    or _degree_excess(cand_arr) >= excess_before
                    or not vectors_before <= set(census(cand_arr).by_vector)):
                step /= 2
                continue
            report.translations.append((current.polygons[curve].label, move))
            current, cur_arr = candidate, cand_arr
            break
        else:
            raise TransformError(
                f"splitting stalled at vertex {target.point} "
                f"(degree {target.degree}) after {max_step_retries} attempts")

    report.degrees_after = degree_histogram(cur_arr)
    report.F_after = cur_arr.F
    full = 2 ** family.n
    report.still_independent_family = len(set(census(cur_arr).by_vector)) == full
    return current, report

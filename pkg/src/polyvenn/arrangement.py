"""Planar subdivision induced by a family of convex polygon boundaries.

The arrangement is a DCEL-style plane graph: vertices are exact intersection
points of two or more boundaries (polygon corners are never vertices), each
boundary arc between consecutive vertices is one edge (a pair of twin
half-edges carrying the curve id), and faces are recovered from next-pointer
orbits.  Every face carries a SignVector: bit i records containment in the
interior of polygon i.

Degenerate input (overlapping collinear sides, a corner on a foreign
boundary) raises DegeneracyError naming the offending curve pair; vertices
where three or more curves cross are legal and are merged by exact
coordinate equality.
"""

from __future__ import annotations

import functools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (
    ConvexPolygon,
    Point,
    Rat,
    Segment,
    angular_compare,
    on_segment,
    require_convex,
    segment_intersection,
)


class DegeneracyError(Exception):
    """The family violates general position.

    kind is "overlap" (collinear shared subsegment, so the curves are not
    finitely intersecting) or "corner_incidence" (a polygon corner lies on
    another polygon's boundary, which also covers single-point tangencies).
    """

    def __init__(self, kind: str, curves: tuple[str, str], location: Point | None = None):
        self.kind = kind
        self.curves = curves
        self.location = location
        msg = f"{kind} between curves {curves[0]!r} and {curves[1]!r}"
        if location is not None:
            msg += f" at {location}"
        super().__init__(msg)


class InvariantError(Exception):
    """An arrangement self-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PolygonFamily:
    polygons: tuple[ConvexPolygon, ...]

    @property
    def n(self) -> int:
        return len(self.polygons)

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.polygons]


def family_of(polygons, labels: bool = True) -> PolygonFamily:
    """Bundle polygons into a family, auto-labelling C1..Cn where needed."""
    polys = list(polygons)
    if labels:
        polys = [p if p.label else ConvexPolygon(p.corners, f"C{i+1}")
                 for i, p in enumerate(polys)]
    return PolygonFamily(tuple(polys))


def validate_family(family: PolygonFamily) -> None:
    if family.n < 1:
        raise ValueError("family must contain at least one polygon")
    for p in family.polygons:
        require_convex(p)
    labels = family.labels
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate curve labels in {labels}")


@dataclass(frozen=True)
class SignVector:
    """n-bit containment label of a face; bit i = inside polygon i."""

    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def flip(self, i: int) -> "SignVector":
        bits = list(self.bits)
        bits[i] ^= 1
        return SignVector(tuple(bits))

    def as_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    @staticmethod
    def from_string(s: str) -> "SignVector":
        return SignVector(tuple(int(c) for c in s))

    @staticmethod
    def zero(n: int) -> "SignVector":
        return SignVector((0,) * n)

    @staticmethod
    def ones(n: int) -> "SignVector":
        return SignVector((1,) * n)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __str__(self) -> str:
        return self.as_string()


@dataclass
class Vertex:
    id: int
    point: Point
    out: list[int] = field(default_factory=list)  # outgoing half-edges, CCW

    @property
    def degree(self) -> int:
        return len(self.out)


@dataclass
class HalfEdge:
    id: int
    curve: int                 # polygon index in the family
    origin: int | None         # vertex id; None for a vertexless loop
    chain: tuple[Point, ...]   # origin point, corners along the arc, target point
    twin: int = -1
    next: int = -1
    cycle: int = -1
    face: int = -1

    @property
    def departure(self) -> tuple[Rat, Rat]:
        return (self.chain[1].x - self.chain[0].x, self.chain[1].y - self.chain[0].y)

    @property
    def is_loop(self) -> bool:
        return self.origin is None


@dataclass
class Face:
    id: int
    sign: SignVector | None = None
    outer_cycle: int | None = None   # cycle id; None for the unbounded face
    holes: list[int] = field(default_factory=list)
    is_outer: bool = False


@dataclass
class Arrangement:
    family: PolygonFamily
    vertices: list[Vertex]
    half_edges: list[HalfEdge]
    faces: list[Face]
    outer_face_id: int
    cycles: list[list[int]]              # cycle id -> half-edge ids in order
    cycle_points: list[list[Point]]      # cycle id -> boundary polygon
    pair_crossings: dict[tuple[int, int], int]  # (i, j), i < j -> crossing count
    n_components: int
    n_loop_components: int

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.half_edges) // 2

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def total_pairwise_crossings(self) -> int:
        return sum(self.pair_crossings.values())

    def face_sign(self, face_id: int) -> SignVector:
        return self.faces[face_id].sign


def build(family: PolygonFamily) -> Arrangement:
    """Construct the arrangement of the family's polygon boundaries."""
    validate_family(family)
    side_lists = [p.sides() for p in family.polygons]

    crossings, pair_crossings = _pairwise_crossings(family, side_lists)

    vertices: list[Vertex] = []
    vertex_at: dict[Point, int] = {}

    def vertex_id(p: Point) -> int:
        if p not in vertex_at:
            vertex_at[p] = len(vertices)
            vertices.append(Vertex(len(vertices), p))
        return vertex_at[p]

    half_edges: list[HalfEdge] = []

    def new_pair(curve: int, origin: int | None, chain: tuple[Point, ...]) -> None:
        h = HalfEdge(len(half_edges), curve, origin, chain)
        target = None if origin is None else vertex_id(chain[-1])
        t = HalfEdge(len(half_edges) + 1, curve, target, tuple(reversed(chain)))
        h.twin, t.twin = t.id, h.id
        half_edges.extend([h, t])

    for ci, poly in enumerate(family.polygons):
        _subdivide_boundary(ci, poly, crossings.get(ci, {}), vertex_id, new_pair)

    _sort_vertex_rings(vertices, half_edges)
    _link_next(vertices, half_edges)
    cycles, cycle_points = _extract_cycles(half_edges)
    faces, outer_face_id = _assemble_faces(half_edges, cycles, cycle_points)
    _assign_signs(family.n, half_edges, faces, outer_face_id)

    n_components, n_loop_components = _count_components(family, vertices, half_edges)
    arr = Arrangement(family, vertices, half_edges, faces, outer_face_id,
                      cycles, cycle_points, pair_crossings,
                      n_components, n_loop_components)
    _check_invariants(arr)
    return arr


def degree_histogram(arr: Arrangement) -> dict[int, int]:
    """Exact histogram of vertex degrees."""
    return dict(Counter(v.degree for v in arr.vertices))


def outer_face_curve_edges(arr: Arrangement) -> dict[str, int]:
    """Number of edges each curve contributes to the outer face boundary."""
    counts = Counter()
    outer = arr.faces[arr.outer_face_id]
    for cyc in outer.holes:
        for hid in arr.cycles[cyc]:
            counts[arr.family.labels[arr.half_edges[hid].curve]] += 1
    return {label: counts.get(label, 0) for label in arr.family.labels}


def face_sample_point(arr: Arrangement, face_id: int) -> Point:
    """An exact rational point strictly interior to the face.

    Takes the midpoint of a boundary segment and offsets it to the face's
    side, halving the offset until exact point location confirms membership.
    """
    face = arr.faces[face_id]
    cyc = face.outer_cycle if face.outer_cycle is not None else face.holes[0]
    h = arr.half_edges[arr.cycles[cyc][0]]
    a, b = h.chain[0], h.chain[1]
    mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    dx, dy = b.x - a.x, b.y - a.y
    # (-dy, dx) points left of the half-edge, i.e. into its face; dividing by
    # the 1-norm keeps the offset length at most `scale`
    reach = abs(dx) + abs(dy)
    scale = Fraction(1, 4)
    for _ in range(128):
        s = scale / reach
        q = Point(mid.x - dy * s, mid.y + dx * s)
        if _point_in_face(arr, q, face):
            return q
        scale /= 2
    raise InvariantError(f"could not find interior sample point for face {face_id}")


def _point_in_face(arr: Arrangement, q: Point, face: Face) -> bool:
    if face.outer_cycle is not None:
        pts = arr.cycle_points[face.outer_cycle]
        if _on_cycle(q, pts) or not _strictly_inside(q, pts):
            return False
    for cyc in face.holes:
        pts = arr.cycle_points[cyc]
        if _on_cycle(q, pts) or _strictly_inside(q, pts):
            return False
    return True


def locate_face(arr: Arrangement, q: Point) -> int | None:
    """Face id containing q, or None if q lies on some boundary."""
    best = None
    best_area = None
    for face in arr.faces:
        if face.outer_cycle is None:
            continue
        pts = arr.cycle_points[face.outer_cycle]
        if _on_cycle(q, pts):
            return None
        if _strictly_inside(q, pts):
            area = abs(_doubled_area(pts))
            if best_area is None or area < best_area:
                best, best_area = face, area
    if best is None:
        return arr.outer_face_id
    for cyc in best.holes:
        pts = arr.cycle_points[cyc]
        if _on_cycle(q, pts):
            return None
    return best.id


# ---------------------------------------------------------------------------
# build stages
# ---------------------------------------------------------------------------

def _bbox(points) -> tuple[Rat, Rat, Rat, Rat]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), max(xs), min(ys), max(ys)


def _bbox_disjoint(a, b) -> bool:
    return a[1] < b[0] or b[1] < a[0] or a[3] < b[2] or b[3] < a[2]


def _pairwise_crossings(family, side_lists):
    """All transversal crossings, keyed per polygon side; degeneracies raise."""
    crossings: dict[int, dict[int, dict[Fraction, Point]]] = defaultdict(lambda: defaultdict(dict))
    pair_crossings: dict[tuple[int, int], int] = {}
    labels = family.labels
    side_boxes = [[_bbox((s.a, s.b)) for s in sides] for sides in side_lists]
    poly_boxes = [_bbox(p.corners) for p in family.polygons]
    for i in range(family.n):
        for j in range(i + 1, family.n):
            if _bbox_disjoint(poly_boxes[i], poly_boxes[j]):
                continue
            count = 0
            for si, seg_i in enumerate(side_lists[i]):
                for sj, seg_j in enumerate(side_lists[j]):
                    if _bbox_disjoint(side_boxes[i][si], side_boxes[j][sj]):
                        continue
                    res = segment_intersection(seg_i, seg_j)
                    if res.kind == "empty":
                        continue
                    if res.kind == "overlap":
                        raise DegeneracyError("overlap", (labels[i], labels[j]),
                                              seg_i.a)
                    if res.touches_endpoint:
                        raise DegeneracyError("corner_incidence",
                                              (labels[i], labels[j]), res.point)
                    crossings[i][si][res.t1] = res.point
                    crossings[j][sj][res.t2] = res.point
                    count += 1
            if count:
                pair_crossings[(i, j)] = count
    return crossings, pair_crossings


def _subdivide_boundary(ci, poly, side_crossings, vertex_id, new_pair):
    """Cut one polygon boundary at its crossing points into half-edge pairs."""
    corners = poly.corners
    k = len(corners)
    boundary: list[tuple[int, Fraction, Point]] = []
    for si in range(k):
        for t in sorted(side_crossings.get(si, {})):
            boundary.append((si, t, side_crossings[si][t]))

    if not boundary:
        new_pair(ci, None, corners + (corners[0],))
        return

    m = len(boundary)
    for a in range(m):
        s0, _, p0 = boundary[a]
        s1, _, p1 = boundary[(a + 1) % m]
        wrapped = a + 1 == m
        cnt = (s1 + k - s0) if wrapped else (s1 - s0)
        chain = [p0]
        chain += [corners[(s0 + 1 + c) % k] for c in range(cnt)]
        chain.append(p1)
        new_pair(ci, vertex_id(p0), tuple(chain))


def _int_direction(dx: Rat, dy: Rat) -> tuple[int, int]:
    # cross-scaling by the (positive) denominators preserves the direction
    # exactly while replacing Fraction comparisons with integer ones
    return dx.numerator * dy.denominator, dy.numerator * dx.denominator


def _sort_vertex_rings(vertices, half_edges):
    directions: dict[int, tuple[int, int]] = {}
    for h in half_edges:
        if h.origin is not None:
            vertices[h.origin].out.append(h.id)
            directions[h.id] = _int_direction(*h.departure)

    def compare(h1_id, h2_id):
        return angular_compare(directions[h1_id], directions[h2_id])

    for v in vertices:
        v.out.sort(key=functools.cmp_to_key(compare))
        for a in range(len(v.out)):
            if compare(v.out[a], v.out[(a + 1) % len(v.out)]) == 0:
                raise InvariantError(
                    f"coincident edge directions at vertex {v.point}")


def _link_next(vertices, half_edges):
    # face-on-the-left: after h, continue with the ring predecessor of twin(h)
    for h in half_edges:
        if h.is_loop:
            h.next = h.id
            continue
        twin = half_edges[h.twin]
        ring = vertices[twin.origin].out
        idx = ring.index(twin.id)
        h.next = ring[idx - 1]


def _extract_cycles(half_edges):
    cycles: list[list[int]] = []
    cycle_points: list[list[Point]] = []
    for h in half_edges:
        if h.cycle != -1:
            continue
        cyc_id = len(cycles)
        ids = []
        cur = h.id
        while True:
            ids.append(cur)
            half_edges[cur].cycle = cyc_id
            cur = half_edges[cur].next
            if cur == h.id:
                break
        cycles.append(ids)
        pts: list[Point] = []
        for hid in ids:
            pts.extend(half_edges[hid].chain[:-1])
        cycle_points.append(pts)
    return cycles, cycle_points


def _doubled_area(pts: list[Point]) -> Rat:
    total = Fraction(0)
    for idx in range(len(pts)):
        a, b = pts[idx], pts[(idx + 1) % len(pts)]
        total += a.x * b.y - b.x * a.y
    return total


def _strictly_inside(p: Point, pts: list[Point]) -> bool:
    # exact crossing count along the open rightward ray; half-open rule makes
    # passes through cycle points unambiguous
    inside = False
    m = len(pts)
    for idx in range(m):
        a, b = pts[idx], pts[(idx + 1) % m]
        if (a.y <= p.y) != (b.y <= p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_cross > p.x:
                inside = not inside
    return inside


def _on_cycle(p: Point, pts: list[Point]) -> bool:
    m = len(pts)
    for idx in range(m):
        a, b = pts[idx], pts[(idx + 1) % m]
        if a != b and on_segment(p, Segment(a, b)):
            return True
    return False


def _assemble_faces(half_edges, cycles, cycle_points):
    areas = [_doubled_area(pts) for pts in cycle_points]
    for cyc_id, area in enumerate(areas):
        if area == 0:
            raise InvariantError(f"degenerate cycle {cyc_id} with zero area")

    faces: list[Face] = []
    face_of_cycle: dict[int, int] = {}
    for cyc_id, area in enumerate(areas):
        if area > 0:
            face = Face(len(faces), outer_cycle=cyc_id)
            face_of_cycle[cyc_id] = face.id
            faces.append(face)

    outer = Face(len(faces), outer_cycle=None, is_outer=True)
    faces.append(outer)

    boxes = {cyc_id: _bbox(cycle_points[cyc_id])
             for cyc_id, area in enumerate(areas) if area > 0}
    for cyc_id, area in enumerate(areas):
        if area > 0:
            continue
        h = half_edges[cycles[cyc_id][0]]
        rep = Point((h.chain[0].x + h.chain[1].x) / 2,
                    (h.chain[0].y + h.chain[1].y) / 2)
        container = None
        container_area = None
        for cand_id, cand_area in enumerate(areas):
            if cand_area <= 0:
                continue
            if container_area is not None and cand_area >= container_area:
                continue
            box = boxes[cand_id]
            if not (box[0] < rep.x < box[1] and box[2] < rep.y < box[3]):
                continue
            pts = cycle_points[cand_id]
            if _on_cycle(rep, pts) or not _strictly_inside(rep, pts):
                continue
            container, container_area = cand_id, cand_area
        target = faces[face_of_cycle[container]] if container is not None else outer
        target.holes.append(cyc_id)
        face_of_cycle[cyc_id] = target.id

    for h in half_edges:
        h.face = face_of_cycle[h.cycle]
    return faces, outer.id


def _assign_signs(n, half_edges, faces, outer_face_id):
    signs: list[SignVector | None] = [None] * len(faces)
    signs[outer_face_id] = SignVector.zero(n)
    queue = [outer_face_id]
    seen = {outer_face_id}
    adjacency = defaultdict(list)
    for h in half_edges:
        if h.id < h.twin:
            t = half_edges[h.twin]
            adjacency[h.face].append((t.face, h.curve))
            adjacency[t.face].append((h.face, h.curve))
    while queue:
        fid = queue.pop()
        for other, curve in adjacency[fid]:
            if other not in seen:
                seen.add(other)
                signs[other] = signs[fid].flip(curve)
                queue.append(other)
    if len(seen) != len(faces):
        raise InvariantError("face adjacency graph is disconnected")
    # path independence: every edge must flip exactly its own curve bit
    for h in half_edges:
        if h.id < h.twin:
            t = half_edges[h.twin]
            if signs[h.face] != signs[t.face].flip(h.curve):
                raise InvariantError(
                    f"inconsistent sign assignment across curve {h.curve}")
    for face, sign in zip(faces, signs):
        face.sign = sign


def _count_components(family, vertices, half_edges):
    parent = list(range(family.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    curves_at_vertex = defaultdict(set)
    for h in half_edges:
        if h.origin is not None:
            curves_at_vertex[h.origin].add(h.curve)
    for curves in curves_at_vertex.values():
        first = min(curves)
        for c in curves:
            ra, rb = find(first), find(c)
            if ra != rb:
                parent[rb] = ra

    intersecting = {h.curve for h in half_edges if h.origin is not None}
    components = {find(c) for c in range(family.n)}
    loop_components = family.n - len(intersecting)
    return len(components), loop_components


def _check_invariants(arr: Arrangement) -> None:
    for v in arr.vertices:
        if v.degree < 4 or v.degree % 2 != 0:
            raise InvariantError(f"vertex {v.point} has degree {v.degree}")
    for h in arr.half_edges:
        if arr.half_edges[h.twin].twin != h.id or h.twin == h.id:
            raise InvariantError("twin pairing broken")
    degree_sum = sum(v.degree for v in arr.vertices)
    loop_edges = sum(1 for h in arr.half_edges if h.is_loop) // 2
    if degree_sum != 2 * (arr.E - loop_edges):
        raise InvariantError("degree sum does not match edge count")
    # Euler audit; a vertexless closed curve counts as one phantom vertex
    if (arr.V + arr.n_loop_components) - arr.E + arr.F != 1 + arr.n_components:
        raise InvariantError(
            f"Euler check failed: V={arr.V} E={arr.E} F={arr.F} "
            f"components={arr.n_components}")
    outer = arr.faces[arr.outer_face_id]
    if outer.sign.weight != 0:
        raise InvariantError("outer face sign is not all-zero")

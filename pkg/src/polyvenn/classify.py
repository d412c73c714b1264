"""Classification of polygon families: FISC / independent family / Venn /
simple verdicts, the region census, and the corner-calculus audit that checks
the vertex-count bound on concrete diagrams."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arrangement import (
    Arrangement,
    DegeneracyError,
    InvariantError,
    PolygonFamily,
    SignVector,
    build,
    degree_histogram,
)
from .geometry import (
    BOUNDARY,
    INSIDE,
    ConvexPolygon,
    Segment,
    point_in_polygon,
    segment_intersection,
)


@dataclass(frozen=True)
class RegionCensus:
    """Faces grouped by sign vector, with the missing and duplicated ones."""

    n: int
    by_vector: dict[SignVector, tuple[int, ...]]

    @property
    def missing(self) -> list[SignVector]:
        out = []
        for value in range(2 ** self.n):
            vec = SignVector(tuple((value >> (self.n - 1 - b)) & 1
                                   for b in range(self.n)))
            if vec not in self.by_vector:
                out.append(vec)
        return out

    @property
    def duplicated(self) -> dict[SignVector, tuple[int, ...]]:
        return {v: fs for v, fs in self.by_vector.items() if len(fs) > 1}

    @property
    def total_faces(self) -> int:
        return sum(len(fs) for fs in self.by_vector.values())


def census(arr: Arrangement) -> RegionCensus:
    by_vector: dict[SignVector, list[int]] = {}
    for face in arr.faces:
        by_vector.setdefault(face.sign, []).append(face.id)
    return RegionCensus(arr.family.n,
                        {v: tuple(fs) for v, fs in by_vector.items()})


@dataclass
class VennReport:
    n: int
    is_fisc: bool
    is_independent_family: bool
    is_venn: bool
    is_simple: bool
    census: RegionCensus
    degree_histogram: dict[int, int]
    V: int
    E: int
    F: int
    missing_vectors: list[SignVector]
    duplicated_vectors: dict[SignVector, tuple[int, ...]]
    notes: list[str] = field(default_factory=list)


def verify_arrangement(arr: Arrangement) -> VennReport:
    cens = census(arr)
    hist = degree_histogram(arr)
    missing = cens.missing
    duplicated = cens.duplicated
    is_independent = not missing
    is_venn = is_independent and not duplicated
    is_simple = all(d == 4 for d in hist)
    is_fisc = SignVector.ones(arr.family.n) in cens.by_vector
    notes = []
    if arr.n_loop_components:
        notes.append(f"{arr.n_loop_components} curve(s) intersect nothing")
    for vec, faces in duplicated.items():
        notes.append(f"region {vec} appears as {len(faces)} faces")
    return VennReport(
        n=arr.family.n,
        is_fisc=is_fisc,
        is_independent_family=is_independent,
        is_venn=is_venn,
        is_simple=is_simple,
        census=cens,
        degree_histogram=hist,
        V=arr.V, E=arr.E, F=arr.F,
        missing_vectors=missing,
        duplicated_vectors=duplicated,
        notes=notes,
    )


def verify(family: PolygonFamily) -> VennReport:
    """Build the arrangement and classify it.  Degeneracy errors propagate."""
    return verify_arrangement(build(family))


@dataclass(frozen=True)
class CornerProfile:
    """Corner-transition counts of curve i relative to curve j.

    Walking the corners of C_i in stored (counter-clockwise) order, each
    consecutive pair is one of: EI, IE, II, or EE split into EE (the joining
    side misses C_j) and EEp (it crosses C_j twice).
    """

    i: int
    j: int
    k: int
    EI: int
    IE: int
    II: int
    EE: int
    EEp: int

    @property
    def total(self) -> int:
        return self.EI + self.IE + self.II + self.EE + self.EEp

    @property
    def crossings(self) -> int:
        return self.EI + self.IE + 2 * self.EEp


def _side_crossing_count(side: Segment, other: ConvexPolygon,
                         labels: tuple[str, str]) -> int:
    count = 0
    for s in other.sides():
        res = segment_intersection(side, s)
        if res.kind == "overlap":
            raise DegeneracyError("overlap", labels, side.a)
        if res.kind == "point":
            if res.touches_endpoint:
                raise DegeneracyError("corner_incidence", labels, res.point)
            count += 1
    return count


def corner_profiles(family: PolygonFamily) -> dict[tuple[int, int], CornerProfile]:
    """CornerProfile for every ordered pair (i, j), i != j."""
    profiles = {}
    for i, pi in enumerate(family.polygons):
        for j, pj in enumerate(family.polygons):
            if i == j:
                continue
            labels = (family.labels[i], family.labels[j])
            marks = []
            for c in pi.corners:
                loc = point_in_polygon(c, pj)
                if loc == BOUNDARY:
                    raise DegeneracyError("corner_incidence", labels, c)
                marks.append("I" if loc == INSIDE else "E")
            counts = {"EI": 0, "IE": 0, "II": 0, "EE": 0, "EEp": 0}
            sides = pi.sides()
            k = pi.k
            for a in range(k):
                pair = marks[a] + marks[(a + 1) % k]
                if pair != "EE":
                    counts[pair] += 1
                    continue
                crossings = _side_crossing_count(sides[a], pj, labels)
                if crossings == 0:
                    counts["EE"] += 1
                elif crossings == 2:
                    counts["EEp"] += 1
                else:
                    raise InvariantError(
                        f"side of {labels[0]} meets convex {labels[1]} "
                        f"{crossings} times between exterior corners")
            profiles[(i, j)] = CornerProfile(i, j, k, counts["EI"], counts["IE"],
                                             counts["II"], counts["EE"], counts["EEp"])
    return profiles


@dataclass(frozen=True)
class GlobalCornerLabels:
    """Per curve: corners on the outer face (epsilon) vs all others (iota)."""

    outer_counts: tuple[int, ...]      # E_i
    inner_counts: tuple[int, ...]      # I_i
    contiguous: tuple[bool, ...]       # epsilon corners cyclically contiguous


def global_corner_labels(family: PolygonFamily) -> GlobalCornerLabels:
    outer, inner, contig = [], [], []
    for i, pi in enumerate(family.polygons):
        marks = []
        for c in pi.corners:
            on_outer = True
            for j, pj in enumerate(family.polygons):
                if i == j:
                    continue
                loc = point_in_polygon(c, pj)
                if loc == BOUNDARY:
                    raise DegeneracyError(
                        "corner_incidence",
                        (family.labels[i], family.labels[j]), c)
                if loc == INSIDE:
                    on_outer = False
            marks.append(on_outer)
        e = sum(marks)
        outer.append(e)
        inner.append(pi.k - e)
        # cyclically contiguous: at most one False->True transition
        rises = sum(1 for a in range(pi.k)
                    if not marks[a - 1] and marks[a])
        contig.append(rises <= 1)
    return GlobalCornerLabels(tuple(outer), tuple(inner), tuple(contig))


@dataclass
class TheoremAudit:
    """Concrete-diagram audit of the corner-calculus vertex bound."""

    n: int
    k: int
    V: int
    labels: GlobalCornerLabels
    profiles: dict[tuple[int, int], CornerProfile]
    eq1_ok: bool                 # five counts sum to k, every ordered pair
    ei_eq_ie_ok: bool
    contiguity_ok: bool
    ineq2_lhs: int               # sum EE_ij over ordered pairs
    ineq2_rhs: int               # sum (E_i - 1)
    ineq3_lhs: int               # sum (II_ij + IE_ij)
    ineq3_rhs: int               # sum I_i
    vertex_cap: int              # 2k C(n,2) - n(k-1)

    @property
    def ineq2_ok(self) -> bool:
        return self.ineq2_lhs >= self.ineq2_rhs

    @property
    def ineq3_ok(self) -> bool:
        return self.ineq3_lhs >= self.ineq3_rhs

    @property
    def vertex_cap_ok(self) -> bool:
        return self.V <= self.vertex_cap

    @property
    def passed(self) -> bool:
        return (self.eq1_ok and self.ei_eq_ie_ok and self.contiguity_ok
                and self.ineq2_ok and self.ineq3_ok and self.vertex_cap_ok)


def theorem_audit(family: PolygonFamily,
                  report: VennReport | None = None) -> TheoremAudit:
    """Run the corner-calculus checks on a verified Venn diagram."""
    if report is None:
        report = verify(family)
    if not report.is_venn:
        raise ValueError("theorem audit requires a Venn diagram")
    ks = {p.k for p in family.polygons}
    if len(ks) != 1:
        raise ValueError(f"theorem audit requires a uniform side count, got {ks}")
    k = ks.pop()
    n = family.n

    profiles = corner_profiles(family)
    labels = global_corner_labels(family)

    eq1_ok = all(p.total == k for p in profiles.values())
    ei_eq_ie_ok = all(p.EI == p.IE for p in profiles.values())
    contiguity_ok = all(labels.contiguous)
    ineq2_lhs = sum(p.EE for p in profiles.values())
    ineq2_rhs = sum(e - 1 for e in labels.outer_counts)
    ineq3_lhs = sum(p.II + p.IE for p in profiles.values())
    ineq3_rhs = sum(labels.inner_counts)
    vertex_cap = 2 * k * math.comb(n, 2) - n * (k - 1)

    return TheoremAudit(n=n, k=k, V=report.V, labels=labels, profiles=profiles,
                        eq1_ok=eq1_ok, ei_eq_ie_ok=ei_eq_ie_ok,
                        contiguity_ok=contiguity_ok,
                        ineq2_lhs=ineq2_lhs, ineq2_rhs=ineq2_rhs,
                        ineq3_lhs=ineq3_lhs, ineq3_rhs=ineq3_rhs,
                        vertex_cap=vertex_cap)

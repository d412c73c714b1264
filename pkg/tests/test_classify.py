import random

import pytest

from polyvenn.arrangement import DegeneracyError, SignVector, build, family_of
from polyvenn.classify import (
    census,
    corner_profiles,
    global_corner_labels,
    theorem_audit,
    verify,
)
from polyvenn.bounds import lemma1_max_vertices, theorem_vertex_cap
from polyvenn.geometry import polygon

from fixtures import (
    nested_squares,
    nonsimple_venn_quads,
    seven_disjoint_quads,
    three_venn_triangles,
    two_disjoint_squares,
    two_overlapping_squares,
)
from helpers import random_triangle_family


def test_census_two_overlapping_squares():
    cens = census(build(two_overlapping_squares()))
    assert len(cens.by_vector) == 4
    assert all(len(fs) == 1 for fs in cens.by_vector.values())
    assert cens.missing == []


def test_census_seven_disjoint_quads():
    cens = census(build(seven_disjoint_quads()))
    present = {v.as_string() for v in cens.by_vector}
    assert len(present) == 8
    assert "0000000" in present
    assert all(v.count("1") <= 1 for v in present)
    assert len(cens.missing) == 120


def test_verify_two_overlapping_squares():
    rep = verify(two_overlapping_squares())
    assert rep.is_venn and rep.is_simple and rep.is_fisc
    assert rep.is_independent_family
    assert rep.V == 2


def test_verify_disjoint():
    rep = verify(two_disjoint_squares())
    assert not rep.is_fisc
    assert not rep.is_independent_family
    assert not rep.is_venn
    assert len(rep.missing_vectors) == 1
    assert rep.missing_vectors[0] == SignVector.from_string("11")


def test_verify_nested():
    rep = verify(nested_squares())
    assert rep.is_fisc  # the small square's interior is inside both
    assert not rep.is_independent_family  # "01" is missing
    assert SignVector.from_string("01") in rep.missing_vectors


def test_verify_nonsimple_venn():
    rep = verify(nonsimple_venn_quads())
    assert rep.is_venn and rep.is_fisc
    assert not rep.is_simple
    assert rep.degree_histogram == {6: 2, 4: 2}
    assert (rep.V, rep.E, rep.F) == (4, 10, 8)


def test_verify_three_venn_triangles():
    rep = verify(three_venn_triangles())
    assert rep.is_venn and rep.is_simple
    assert rep.V == 2 ** 3 - 2


def test_corner_profiles_disjoint():
    profs = corner_profiles(two_disjoint_squares())
    for prof in profs.values():
        assert (prof.EE, prof.EI, prof.IE, prof.II, prof.EEp) == (4, 0, 0, 0, 0)


def test_corner_profiles_nested():
    profs = corner_profiles(nested_squares())
    inner_vs_outer = profs[(1, 0)]
    outer_vs_inner = profs[(0, 1)]
    assert inner_vs_outer.II == 4 and inner_vs_outer.total == 4
    assert outer_vs_inner.EE == 4 and outer_vs_inner.total == 4


def test_corner_profiles_crossing_identity():
    # per ordered pair: EI + IE + 2*EEp equals the pair's crossing count
    for fam in (two_overlapping_squares(), three_venn_triangles(),
                nonsimple_venn_quads()):
        arr = build(fam)
        profs = corner_profiles(fam)
        for (i, j), prof in profs.items():
            expected = arr.pair_crossings.get((min(i, j), max(i, j)), 0)
            assert prof.crossings == expected
            assert prof.total == fam.polygons[i].k
            assert prof.EI == prof.IE


def test_corner_profiles_random_families_eq1():
    rng = random.Random(5)
    checked = 0
    while checked < 60:
        fam = family_of(random_triangle_family(rng, rng.randint(2, 4)))
        try:
            arr = build(fam)
            profs = corner_profiles(fam)
        except DegeneracyError:
            continue
        checked += 1
        total = 0
        for (i, j), prof in profs.items():
            assert prof.total == 3
            assert prof.EI == prof.IE
            total += prof.crossings
        # ordered-pair sum counts every pairwise crossing twice
        assert total == 2 * arr.total_pairwise_crossings
        assert arr.V <= arr.total_pairwise_crossings


def test_corner_profile_corner_on_boundary_raises():
    fam = family_of([
        polygon([(0, 0), (4, 0), (4, 4), (0, 4)], "A"),
        polygon([(2, 0), (6, -2), (6, 2)], "B"),  # corner (2,0) on A's bottom side
    ])
    with pytest.raises(DegeneracyError):
        corner_profiles(fam)


def test_global_corner_labels_two_squares():
    labels = global_corner_labels(two_overlapping_squares())
    # each square has one corner inside the other
    assert labels.outer_counts == (3, 3)
    assert labels.inner_counts == (1, 1)
    assert labels.contiguous == (True, True)


def test_theorem_audit_two_squares():
    audit = theorem_audit(two_overlapping_squares())
    assert audit.passed
    assert audit.V == 2
    assert audit.vertex_cap == 2 * 4 * 1 - 2 * 3  # n=2, k=4


def test_theorem_audit_three_triangles():
    audit = theorem_audit(three_venn_triangles())
    assert audit.passed
    assert audit.V == 6
    assert audit.vertex_cap == theorem_vertex_cap(3, 3)


def test_theorem_audit_nonsimple_venn():
    audit = theorem_audit(nonsimple_venn_quads())
    assert audit.passed
    assert audit.V == 4


def test_theorem_audit_requires_venn():
    with pytest.raises(ValueError):
        theorem_audit(two_disjoint_squares())


def test_fuzz_seven_triangles_never_venn():
    # quick version of the impossibility fuzz; acceptance runs 10^4
    rng = random.Random(77)
    checked = 0
    while checked < 150:
        fam = family_of(random_triangle_family(rng, 7))
        try:
            rep = verify(fam)
        except DegeneracyError:
            continue
        checked += 1
        assert not rep.is_venn
        assert rep.V <= lemma1_max_vertices(7, 3) == 126

from fractions import Fraction

import pytest

from polyvenn.classify import verify
from polyvenn.familydoc import (
    DocumentError,
    FamilyDocument,
    SymmetryBlock,
    bundled_table2,
    document_for_family,
    format_coord,
    parse_coord,
    parse_document,
    serialize_document,
)

from fixtures import table2_generator, two_overlapping_squares


def test_parse_coord_forms():
    assert parse_coord("-0.446") == Fraction(-446, 1000)
    assert parse_coord("3") == 3
    assert parse_coord("7/3") == Fraction(7, 3)
    assert parse_coord("-7/3") == Fraction(-7, 3)
    for bad in ("1e5", "0x10", "", "1.", ".5", "1/0x", None, 1.5):
        with pytest.raises(DocumentError):
            parse_coord(bad)


def test_format_coord_exact_decimal():
    assert format_coord(Fraction(-446, 1000)) == "-0.446"
    assert format_coord(Fraction(0)) == "0"
    assert format_coord(Fraction(5, 4)) == "1.25"
    assert format_coord(Fraction(1, 3)) == "1/3"
    assert format_coord(Fraction(-7, 20)) == "-0.35"


def test_coord_round_trip():
    for value in (Fraction(-446, 1000), Fraction(1, 3), Fraction(12, 1),
                  Fraction(-9, 8), Fraction(123456789, 10 ** 9)):
        assert parse_coord(format_coord(value)) == value


def test_document_round_trip_plain():
    doc = document_for_family(two_overlapping_squares())
    text = serialize_document(doc)
    assert parse_document(text) == doc
    assert serialize_document(parse_document(text)) == text


def test_document_round_trip_symmetric():
    doc = FamilyDocument((table2_generator(),), SymmetryBlock(0, 7, 12))
    text = serialize_document(doc)
    again = parse_document(text)
    assert again == doc
    assert again.n == 7


def test_bundled_table2_expands_and_verifies():
    doc = bundled_table2()
    assert doc.n == 7
    assert len(doc.polygons) == 1
    family = doc.to_family()
    assert family.n == 7
    report = verify(family)
    assert report.is_venn and report.is_simple
    assert report.V == 126


def test_parse_document_errors():
    with pytest.raises(DocumentError):
        parse_document("not json at all")
    with pytest.raises(DocumentError):
        parse_document('{"format": "something-else", "version": 1}')
    base = ('{"format": "polyvenn-family", "version": 1, "polygons": %s%s}')
    with pytest.raises(DocumentError):
        parse_document(base % ("[]", ""))
    # clockwise corners violate the convexity invariant on load
    cw = ('[{"label": "A", "corners": [["0","0"],["0","1"],["1","1"],["1","0"]]}]')
    with pytest.raises(DocumentError):
        parse_document(base % (cw, ""))
    # declared n contradicts the content
    square = ('[{"label": "A", "corners": [["0","0"],["1","0"],["1","1"],["0","1"]]}]')
    with pytest.raises(DocumentError):
        parse_document(base % (square, ', "n": 3'))
    # symmetry with a polygon count that is neither 1 nor order
    two = ('[{"label": "A", "corners": [["0","0"],["1","0"],["0","1"]]},'
           '{"label": "B", "corners": [["5","0"],["6","0"],["5","1"]]}]')
    with pytest.raises(DocumentError):
        parse_document(base % (two, ', "symmetry": {"generator": 0, "order": 3, "digits": 6}'))


def test_symmetric_document_with_all_polygons_listed():
    from polyvenn.search import symmetric_family

    fam = symmetric_family(table2_generator(), 7, 12)
    doc = FamilyDocument(fam.polygons, SymmetryBlock(0, 7, 12))
    text = serialize_document(doc)
    again = parse_document(text)
    assert again.to_family().polygons == fam.polygons

"""The .family document format: JSON text with exact decimal coordinates.

Grammar of a coordinate string (exact, no binary floats anywhere):

    coord   = decimal | rational
    decimal = ["-"] digits ["." digits]
    rational= ["-"] digits "/" digits      ; fallback for denominators that
                                           ; are not products of 2s and 5s

Document layout (JSON):

    {
      "format": "polyvenn-family",
      "version": 1,
      "n": 7,
      "polygons": [{"label": "C1", "corners": [[x, y], ...]}, ...],
      "symmetry": {"generator": 0, "order": 7, "digits": 12}   // optional
    }

With a symmetry block, the document may store only the generator polygon;
loading expands it into the full rotational family, so rotation precision is
reproducible from the file alone.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .arrangement import PolygonFamily
from .geometry import ConvexPolygon, Point, Rat, require_convex

FORMAT_NAME = "polyvenn-family"
FORMAT_VERSION = 1

_DECIMAL_RE = re.compile(r"-?\d+(\.\d+)?$")
_RATIONAL_RE = re.compile(r"-?\d+/\d+$")


class DocumentError(ValueError):
    """The document text is malformed or violates format invariants."""


def parse_coord(text: str) -> Rat:
    if not isinstance(text, str):
        raise DocumentError(f"coordinate must be a string, got {text!r}")
    if _DECIMAL_RE.match(text) or _RATIONAL_RE.match(text):
        return Fraction(text)
    raise DocumentError(f"coordinate {text!r} is neither decimal nor p/q")


def format_coord(value: Rat) -> str:
    """Exact decimal string when the denominator divides a power of ten,
    else the p/q form."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    sign = "-" if value.numerator < 0 else ""
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


@dataclass(frozen=True)
class SymmetryBlock:
    generator: int
    order: int
    digits: int


@dataclass(frozen=True)
class FamilyDocument:
    polygons: tuple[ConvexPolygon, ...]
    symmetry: SymmetryBlock | None = None
    version: int = FORMAT_VERSION

    @property
    def n(self) -> int:
        return self.symmetry.order if self.symmetry else len(self.polygons)

    def to_family(self) -> PolygonFamily:
        """Expand into the full polygon family, deriving rotational copies
        from the generator when a symmetry block is present."""
        from .search import symmetric_family

        if self.symmetry is None:
            return PolygonFamily(self.polygons)
        if len(self.polygons) == self.symmetry.order:
            return PolygonFamily(self.polygons)
        generator = self.polygons[self.symmetry.generator]
        return symmetric_family(generator, self.symmetry.order,
                                self.symmetry.digits)


def _parse_polygon(obj, index: int) -> ConvexPolygon:
    if not isinstance(obj, dict) or "corners" not in obj:
        raise DocumentError(f"polygon {index} must be an object with corners")
    corners = obj["corners"]
    if not isinstance(corners, list) or len(corners) < 3:
        raise DocumentError(f"polygon {index} needs at least 3 corners")
    points = []
    for c in corners:
        if not isinstance(c, list) or len(c) != 2:
            raise DocumentError(f"corner {c!r} must be an [x, y] pair")
        points.append(Point(parse_coord(c[0]), parse_coord(c[1])))
    label = obj.get("label", f"C{index + 1}")
    if not isinstance(label, str) or not label:
        raise DocumentError(f"polygon {index} has an invalid label")
    poly = ConvexPolygon(tuple(points), label)
    try:
        require_convex(poly)
    except ValueError as err:
        raise DocumentError(str(err)) from err
    return poly


def parse_document(text: str) -> FamilyDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if data.get("format") != FORMAT_NAME:
        raise DocumentError(f'expected format "{FORMAT_NAME}"')
    if data.get("version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported version {data.get('version')!r}")
    raw_polys = data.get("polygons")
    if not isinstance(raw_polys, list) or not raw_polys:
        raise DocumentError("document needs a non-empty polygons list")
    polygons = tuple(_parse_polygon(p, i) for i, p in enumerate(raw_polys))
    labels = [p.label for p in polygons]
    if len(set(labels)) != len(labels):
        raise DocumentError(f"duplicate polygon labels in {labels}")

    symmetry = None
    if data.get("symmetry") is not None:
        sym = data["symmetry"]
        if not isinstance(sym, dict):
            raise DocumentError("symmetry must be an object")
        try:
            symmetry = SymmetryBlock(int(sym["generator"]), int(sym["order"]),
                                     int(sym["digits"]))
        except (KeyError, TypeError, ValueError) as err:
            raise DocumentError(f"bad symmetry block: {err}") from err
        if symmetry.order < 1 or symmetry.digits < 1:
            raise DocumentError("symmetry order and digits must be positive")
        if not 0 <= symmetry.generator < len(polygons):
            raise DocumentError("symmetry generator index out of range")
        if len(polygons) not in (1, symmetry.order):
            raise DocumentError(
                "with symmetry, store either the generator alone or all "
                f"{symmetry.order} polygons")

    n_declared = data.get("n")
    doc = FamilyDocument(polygons, symmetry)
    if n_declared is not None and n_declared != doc.n:
        raise DocumentError(f"declared n={n_declared} but document implies {doc.n}")
    return doc


def serialize_document(doc: FamilyDocument) -> str:
    data = {
        "format": FORMAT_NAME,
        "version": doc.version,
        "n": doc.n,
        "polygons": [
            {"label": p.label,
             "corners": [[format_coord(c.x), format_coord(c.y)]
                         for c in p.corners]}
            for p in doc.polygons
        ],
    }
    if doc.symmetry is not None:
        data["symmetry"] = {
            "generator": doc.symmetry.generator,
            "order": doc.symmetry.order,
            "digits": doc.symmetry.digits,
        }
    return json.dumps(data, indent=2) + "\n"


def load_path(path) -> FamilyDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def save_path(doc: FamilyDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(doc))


def document_for_family(family: PolygonFamily) -> FamilyDocument:
    return FamilyDocument(family.polygons)


def bundled_table2() -> FamilyDocument:
    """The seven-quadrilateral diagram shipped with the package."""
    text = resources.files("polyvenn.data").joinpath("table2.family").read_text()
    return parse_document(text)

/**
 * The .family document as the editor holds it: coordinates stay exact
 * decimal/rational strings end to end; the editor never converts a stored
 * coordinate through a float except for drawing.
 */

export type Coord = [string, string];

export interface PolygonDoc {
  label: string;
  corners: Coord[];
}

export interface SymmetryDoc {
  generator: number;
  order: number;
  digits: number;
}

export interface FamilyDoc {
  format: "polyvenn-family";
  version: 1;
  n: number;
  polygons: PolygonDoc[];
  symmetry?: SymmetryDoc;
}

const COORD_RE = /^-?\d+(\.\d+)?$|^-?\d+\/\d+$/;

export class DocumentFormatError extends Error {}

export function parseFamilyDoc(text: string): FamilyDoc {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new DocumentFormatError(`not valid JSON: ${err}`);
  }
  const doc = data as FamilyDoc;
  if (doc === null || typeof doc !== "object" || doc.format !== "polyvenn-family") {
    throw new DocumentFormatError('expected format "polyvenn-family"');
  }
  if (doc.version !== 1) {
    throw new DocumentFormatError(`unsupported version ${doc.version}`);
  }
  if (!Array.isArray(doc.polygons) || doc.polygons.length === 0) {
    throw new DocumentFormatError("document needs polygons");
  }
  for (const poly of doc.polygons) {
    if (typeof poly.label !== "string" || !Array.isArray(poly.corners)
        || poly.corners.length < 3) {
      throw new DocumentFormatError("each polygon needs a label and >= 3 corners");
    }
    for (const corner of poly.corners) {
      if (!Array.isArray(corner) || corner.length !== 2
          || !COORD_RE.test(corner[0]) || !COORD_RE.test(corner[1])) {
        throw new DocumentFormatError(`bad coordinate ${JSON.stringify(corner)}`);
      }
    }
  }
  if (doc.symmetry !== undefined && doc.symmetry !== null) {
    const sym = doc.symmetry;
    if (!(sym.generator >= 0) || !(sym.order >= 1) || !(sym.digits >= 1)) {
      throw new DocumentFormatError("bad symmetry block");
    }
  }
  return doc;
}

/** Stable serialization: fixed key order, two-space indent, trailing newline
 * (matches the service's own writer closely enough to round-trip). */
export function serializeFamilyDoc(doc: FamilyDoc): string {
  const data: Record<string, unknown> = {
    format: doc.format,
    version: doc.version,
    n: doc.symmetry ? doc.symmetry.order : doc.polygons.length,
    polygons: doc.polygons.map((p) => ({ label: p.label, corners: p.corners })),
  };
  if (doc.symmetry) {
    data.symmetry = {
      generator: doc.symmetry.generator,
      order: doc.symmetry.order,
      digits: doc.symmetry.digits,
    };
  }
  return JSON.stringify(data, null, 2) + "\n";
}

export function cloneDoc(doc: FamilyDoc): FamilyDoc {
  return JSON.parse(JSON.stringify(doc)) as FamilyDoc;
}

/** Decimal string for a dragged position at the configured precision,
 * normalized so "-0.000" never appears. */
export function formatDragCoord(value: number, precision: number): string {
  let text = value.toFixed(precision);
  if (Number(text) === 0) {
    text = (0).toFixed(precision);
  }
  return text;
}

export function coordToNumber(coord: string): number {
  if (coord.includes("/")) {
    const [num, den] = coord.split("/");
    return Number(num) / Number(den);
  }
  return Number(coord);
}

import { describe, expect, it } from "vitest";

import {
  DocumentFormatError,
  coordToNumber,
  formatDragCoord,
  parseFamilyDoc,
  serializeFamilyDoc,
} from "../src/model/document.js";
import { fixtureDocText } from "./fake_service.js";

describe("family document", () => {
  it("round-trips the service's own serialization byte for byte", () => {
    for (const name of ["table2", "expanded"]) {
      const text = fixtureDocText(name);
      expect(serializeFamilyDoc(parseFamilyDoc(text))).toBe(text);
    }
  });

  it("rejects malformed documents", () => {
    expect(() => parseFamilyDoc("not json")).toThrow(DocumentFormatError);
    expect(() => parseFamilyDoc('{"format": "other", "version": 1}'))
      .toThrow(DocumentFormatError);
    expect(() => parseFamilyDoc(JSON.stringify({
      format: "polyvenn-family", version: 1, n: 1,
      polygons: [{ label: "A", corners: [["0", "0"], ["1", "0"]] }],
    }))).toThrow(/3 corners/);
    expect(() => parseFamilyDoc(JSON.stringify({
      format: "polyvenn-family", version: 1, n: 1,
      polygons: [{ label: "A", corners: [["0", "0"], ["1e3", "0"], ["0", "1"]] }],
    }))).toThrow(/bad coordinate/);
  });

  it("formats drag coordinates at fixed precision", () => {
    expect(formatDragCoord(1.4, 3)).toBe("1.400");
    expect(formatDragCoord(-0.4455, 3)).toBe("-0.446");
    expect(formatDragCoord(-0.00001, 3)).toBe("0.000");
    expect(formatDragCoord(2, 2)).toBe("2.00");
  });

  it("reads decimal and rational coordinates as numbers", () => {
    expect(coordToNumber("-0.446")).toBeCloseTo(-0.446, 12);
    expect(coordToNumber("7/2")).toBeCloseTo(3.5, 12);
  });
});

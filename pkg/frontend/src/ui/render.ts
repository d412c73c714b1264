import type { Geometry } from "../model/api.js";

export const CURVE_COLORS = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                             "#d35400", "#16a085", "#7f8c8d", "#2c3e50",
                             "#a04000", "#1a5276"];

export interface Viewport {
  size: number;
  toScreen(x: number, y: number): [number, number];
  toWorld(sx: number, sy: number): [number, number];
}

export function fitViewport(geometry: Geometry, size: number): Viewport {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const poly of geometry.polygons) {
    for (const [x, y] of poly.corners) {
      xs.push(x);
      ys.push(y);
    }
  }
  const loX = Math.min(...xs);
  const hiX = Math.max(...xs);
  const loY = Math.min(...ys);
  const hiY = Math.max(...ys);
  const span = Math.max(hiX - loX, hiY - loY, 1e-6);
  const margin = span * 0.1;
  const scale = size / (span + 2 * margin);
  return {
    size,
    toScreen: (x, y) => [(x - loX + margin) * scale,
                         (hiY - y + margin) * scale],
    toWorld: (sx, sy) => [loX - margin + sx / scale,
                          hiY + margin - sy / scale],
  };
}

function pathFrom(points: [number, number][], vp: Viewport): string {
  return points
    .map(([x, y], i) => {
      const [sx, sy] = vp.toScreen(x, y);
      return `${i === 0 ? "M" : "L"}${sx.toFixed(2)},${sy.toFixed(2)}`;
    })
    .join(" ") + " Z";
}

function faceFill(weight: number, n: number): string {
  const light = 92 - (62 * weight) / Math.max(n, 1);
  return `hsl(215, 42%, ${light}%)`;
}

export interface RenderOptions {
  shade: boolean;
  size: number;
}

/** Static SVG markup for the current geometry (also used for export). */
export function geometryToSvg(geometry: Geometry, n: number,
                              opts: RenderOptions): string {
  const vp = fitViewport(geometry, opts.size);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${opts.size}" ` +
    `height="${opts.size}" viewBox="0 0 ${opts.size} ${opts.size}">`,
    `<rect width="${opts.size}" height="${opts.size}" fill="white"/>`,
  ];
  if (opts.shade) {
    for (const face of geometry.faces) {
      if (face.is_outer || !face.outer) continue;
      const weight = face.sign.split("").filter((c) => c === "1").length;
      const d = [pathFrom(face.outer, vp),
                 ...face.holes.map((h) => pathFrom(h, vp))].join(" ");
      parts.push(`<path d="${d}" fill="${faceFill(weight, n)}" ` +
                 `fill-rule="evenodd" stroke="none"><title>${face.sign}` +
                 `</title></path>`);
    }
  }
  geometry.polygons.forEach((poly, idx) => {
    const color = CURVE_COLORS[idx % CURVE_COLORS.length];
    parts.push(`<path d="${pathFrom(poly.corners, vp)}" fill="none" ` +
               `stroke="${color}" stroke-width="2" data-curve="${poly.label}"/>`);
  });
  for (const [x, y] of geometry.vertices) {
    const [sx, sy] = vp.toScreen(x, y);
    parts.push(`<circle cx="${sx.toFixed(2)}" cy="${sy.toFixed(2)}" r="2.4" ` +
               `fill="#2c3e50"/>`);
  }
  parts.push("</svg>");
  return parts.join("\n");
}

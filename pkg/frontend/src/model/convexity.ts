import { Coord, coordToNumber } from "./document.js";

/**
 * Local convexity hint so an invalid drag can be flagged before any server
 * round trip.  Float arithmetic is fine here: this is a UI hint, the exact
 * verdict always comes from the service.
 */
export function convexityViolation(corners: Coord[]): string | null {
  const k = corners.length;
  if (k < 3) return "a polygon needs at least 3 corners";
  const pts = corners.map(([x, y]) => [coordToNumber(x), coordToNumber(y)]);
  for (let i = 0; i < k; i++) {
    const [ax, ay] = pts[i];
    const [bx, by] = pts[(i + 1) % k];
    const [cx, cy] = pts[(i + 2) % k];
    const cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if (cross <= 0) {
      return `corners ${i}-${(i + 1) % k}-${(i + 2) % k} do not turn left`;
    }
  }
  return null;
}

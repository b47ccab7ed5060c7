import type { GraphPayload } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export const VIEW_SIZE = 400;
const CENTER = VIEW_SIZE / 2;
const RADIUS = 160;

/**
 * Deterministic circular layout: vertex 0 sits at the top and ids proceed
 * clockwise at equal angles. A pure function of the vertex count, so the
 * same graph always draws identically.
 */
export function circularLayout(graph: GraphPayload): Point[] {
  const n = graph.num_vertices;
  const points: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * v) / Math.max(n, 1);
    points.push({
      x: CENTER + RADIUS * Math.cos(angle),
      y: CENTER + RADIUS * Math.sin(angle),
    });
  }
  return points;
}

/** Midpoint of an edge, nudged outward so weight labels avoid the line. */
export function edgeLabelPos(a: Point, b: Point): Point {
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  return { x: mx - (dy / len) * 12, y: my + (dx / len) * 12 };
}

/**
 * Scatterplot frame rendering.
 *
 * A frame is computed in two steps: buildFramePlan does the pure work
 * (curve evaluation, viewport transform, culling, grouping), drawFrame
 * replays the plan onto a canvas context. The split keeps the per-node
 * math testable and benchmarkable without a DOM.
 *
 * The curve is evaluated once per distinct density rather than per
 * node: a layout has at most num_max distinct cell densities, so this
 * turns 100k curve evaluations into a few hundred. Sparse nodes under
 * an ld_left curve are the exception (their radius depends on the
 * per-node local density), handled per node.
 */

import { LD_LEFT, RadiusCurve } from "./curve.js";
import { NodeArrays } from "./layoutDoc.js";
import { Viewport } from "./viewport.js";

export const PALETTE = [
  "#4c78a8",
  "#f58518",
  "#54a24b",
  "#e45756",
  "#72b7b2",
  "#eeca3b",
  "#b279a2",
  "#9d755d",
];

/** Sorted distinct densities plus each node's index into them. */
export interface UniqueDensities {
  values: Float64Array;
  indexOf: Uint32Array;
}

export function buildUniqueDensities(density: Float64Array): UniqueDensities {
  const sorted = Float64Array.from(density).sort();
  const values: number[] = [];
  for (let i = 0; i < sorted.length; i++) {
    if (i === 0 || sorted[i] !== sorted[i - 1]) {
      values.push(sorted[i]);
    }
  }
  const table = new Map<number, number>();
  values.forEach((v, i) => table.set(v, i));
  const indexOf = new Uint32Array(density.length);
  for (let i = 0; i < density.length; i++) {
    indexOf[i] = table.get(density[i])!;
  }
  return { values: Float64Array.from(values), indexOf };
}

export interface FramePlan {
  /** screen coordinates and pixel radii of the visible nodes */
  sx: Float64Array;
  sy: Float64Array;
  radiusPx: Float64Array;
  colorIndex: Uint16Array;
  count: number;
}

/**
 * Radii in world units for every node under the given curve: table
 * lookup for cell densities, per-node branch for sparse nodes under
 * ld_left (their radius depends on the local density).
 */
export function nodeRadii(
  nodes: NodeArrays,
  uniq: UniqueDensities,
  curve: RadiusCurve,
  local: Float64Array | null,
): Float64Array {
  const perDensity = new Float64Array(uniq.values.length);
  const sparseLeft = curve.mode === LD_LEFT;
  for (let u = 0; u < uniq.values.length; u++) {
    const d = uniq.values[u];
    perDensity[u] =
      sparseLeft && d < curve.dK ? NaN : curve.evaluate(d, null);
  }
  const out = new Float64Array(nodes.count);
  for (let i = 0; i < nodes.count; i++) {
    const table = perDensity[uniq.indexOf[i]];
    if (Number.isNaN(table)) {
      out[i] = curve.evaluate(nodes.density[i], local === null ? null : local[i]);
    } else {
      out[i] = table;
    }
  }
  return out;
}

export function buildFramePlan(
  nodes: NodeArrays,
  radii: Float64Array,
  vp: Viewport,
  width: number,
  height: number,
): FramePlan {
  const n = nodes.count;
  const sx = new Float64Array(n);
  const sy = new Float64Array(n);
  const radiusPx = new Float64Array(n);
  const colorIndex = new Uint16Array(n);
  let count = 0;
  for (let i = 0; i < n; i++) {
    const px = nodes.x[i] * vp.zoom + vp.ox;
    const py = vp.oy - nodes.y[i] * vp.zoom;
    const rp = radii[i] * vp.zoom;
    if (px + rp < 0 || px - rp > width || py + rp < 0 || py - rp > height) {
      continue;
    }
    sx[count] = px;
    sy[count] = py;
    radiusPx[count] = rp;
    colorIndex[count] = nodes.colorIndex[i];
    count++;
  }
  return { sx, sy, radiusPx, colorIndex, count };
}

/** The subset of CanvasRenderingContext2D the renderer touches. */
export interface CircleContext {
  fillStyle: string | CanvasGradient | CanvasPattern;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
}

const TWO_PI = 2 * Math.PI;

/**
 * Draw a plan, batching nodes by color so each color costs one fill.
 * Returns the number of circles drawn.
 */
export function drawFrame(ctx: CircleContext, plan: FramePlan): number {
  const byColor = new Map<number, number[]>();
  for (let i = 0; i < plan.count; i++) {
    let bucket = byColor.get(plan.colorIndex[i]);
    if (bucket === undefined) {
      bucket = [];
      byColor.set(plan.colorIndex[i], bucket);
    }
    bucket.push(i);
  }
  let drawn = 0;
  for (const [color, bucket] of byColor) {
    ctx.fillStyle = PALETTE[color % PALETTE.length];
    ctx.beginPath();
    for (const i of bucket) {
      ctx.moveTo(plan.sx[i] + plan.radiusPx[i], plan.sy[i]);
      ctx.arc(plan.sx[i], plan.sy[i], plan.radiusPx[i], 0, TWO_PI);
      drawn++;
    }
    ctx.fill();
  }
  return drawn;
}

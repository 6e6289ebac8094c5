/**
 * Radius curve editor chart: scales, control point dragging, painting.
 *
 * The x axis is split at the d_k divider. Right of the divider lives
 * the dense axis, cell density in [d_k, 1]. Left of it, when the
 * layout has sparse nodes, lives the local-density axis over the
 * sparse range. The low-density control point can be dragged across
 * the divider, which switches the curve between its two modes.
 *
 * Dragging never rejects input: the high-density point is projected
 * onto the packing-radius curve, the low-density point is clamped to
 * the feasible zone. Every drag therefore produces a constructible
 * curve.
 */

import { LD_LEFT, LD_RIGHT, RadiusCurve } from "./curve.js";
import { Histogram } from "./histogram.js";

function clamp(v: number, lo: number, hi: number): number {
  return v < lo ? lo : v > hi ? hi : v;
}

export interface ChartLayout {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
  /** x of the d_k divider; equals `left` when there is no sparse axis */
  divider: number;
  dK: number;
  rPack1: number;
  /** top of the r axis, a little above the ceiling at d_k */
  rMax: number;
  sparseRange: [number, number] | null;
}

export function makeChartLayout(
  width: number,
  height: number,
  dK: number,
  rPack1: number,
  sparseRange: [number, number] | null,
): ChartLayout {
  const left = 46;
  const right = 14;
  const top = 12;
  const bottom = 30;
  const plotW = width - left - right;
  const divider = sparseRange === null ? left : left + 0.3 * plotW;
  const rMax = (rPack1 / Math.sqrt(dK)) * 1.08;
  return {
    width,
    height,
    left,
    right,
    top,
    bottom,
    divider,
    dK,
    rPack1,
    rMax,
    sparseRange,
  };
}

export function xFromDense(L: ChartLayout, d: number): number {
  const x1 = L.width - L.right;
  const span = 1 - L.dK;
  if (span <= 0) {
    return x1;
  }
  return L.divider + ((d - L.dK) / span) * (x1 - L.divider);
}

export function denseFromX(L: ChartLayout, x: number): number {
  const x1 = L.width - L.right;
  if (x1 <= L.divider) {
    return L.dK;
  }
  return L.dK + ((x - L.divider) / (x1 - L.divider)) * (1 - L.dK);
}

export function xFromSparse(L: ChartLayout, local: number): number {
  if (L.sparseRange === null) {
    return L.left;
  }
  const [lo, hi] = L.sparseRange;
  const span = hi - lo;
  if (span <= 0) {
    return (L.left + L.divider) / 2;
  }
  return L.left + ((local - lo) / span) * (L.divider - L.left);
}

export function sparseFromX(L: ChartLayout, x: number): number {
  if (L.sparseRange === null) {
    return 0;
  }
  const [lo, hi] = L.sparseRange;
  if (L.divider <= L.left) {
    return lo;
  }
  return lo + ((x - L.left) / (L.divider - L.left)) * (hi - lo);
}

export function yFromR(L: ChartLayout, r: number): number {
  const y0 = L.height - L.bottom;
  return y0 - (r / L.rMax) * (y0 - L.top);
}

export function rFromY(L: ChartLayout, y: number): number {
  const y0 = L.height - L.bottom;
  if (y0 <= L.top) {
    return 0;
  }
  return ((y0 - y) / (y0 - L.top)) * L.rMax;
}

/**
 * Move the high-density point to density d. The point lives on the
 * packing-radius curve, so its radius is implied; d is clamped to
 * [d_k, 1]. If the low-density point of an ld_right curve would be
 * left stranded past the new d_hd, it is pulled back with it.
 */
export function projectHD(curve: RadiusCurve, d: number): RadiusCurve {
  const dHd = clamp(d, curve.dK, 1);
  const hd: [number, number] = [dHd, curve.rPackAt(dHd)];
  let ld = curve.ld;
  if (curve.mode === LD_RIGHT) {
    const dLd = clamp(curve.ld[0], curve.dK, dHd);
    const rLd = clamp(curve.ld[1], curve.rPack1, curve.rPackAt(dLd));
    ld = [dLd, rLd];
  }
  return new RadiusCurve(
    hd,
    ld,
    curve.dK,
    curve.rPack1,
    curve.mode,
    curve.sparseRange,
    curve.epsilon,
  );
}

/**
 * Move the low-density point. `side` says which half of the chart the
 * drag is on; crossing the divider switches the curve mode. Values
 * are clamped to the feasible zone for that side: on the dense side
 * the point stays between the floor and the packing ceiling, on the
 * sparse side between the floor and rMax (sparse radii have no
 * packing ceiling; rMax is the chart top).
 */
export function dragLDValues(
  curve: RadiusCurve,
  side: "dense" | "sparse",
  v: number,
  r: number,
  rMax: number,
): RadiusCurve {
  let mode = curve.mode;
  let ld: [number, number];
  if (side === "sparse" && curve.sparseRange !== null) {
    const [lo, hi] = curve.sparseRange;
    mode = LD_LEFT;
    ld = [clamp(v, lo, hi), clamp(r, curve.rPack1, rMax)];
  } else {
    mode = LD_RIGHT;
    const d = clamp(v, curve.dK, curve.hd[0]);
    ld = [d, clamp(r, curve.rPack1, curve.rPackAt(d))];
  }
  return new RadiusCurve(
    curve.hd,
    ld,
    curve.dK,
    curve.rPack1,
    mode,
    curve.sparseRange,
    curve.epsilon,
  );
}

export function controlPointPx(
  L: ChartLayout,
  curve: RadiusCurve,
): { hd: [number, number]; ld: [number, number] } {
  const hd: [number, number] = [
    xFromDense(L, curve.hd[0]),
    yFromR(L, curve.hd[1]),
  ];
  const ld: [number, number] =
    curve.mode === LD_LEFT
      ? [xFromSparse(L, curve.ld[0]), yFromR(L, curve.ld[1])]
      : [xFromDense(L, curve.ld[0]), yFromR(L, curve.ld[1])];
  return { hd, ld };
}

export function hitControlPoint(
  L: ChartLayout,
  curve: RadiusCurve,
  px: number,
  py: number,
  tolPx = 9,
): "hd" | "ld" | null {
  const pts = controlPointPx(L, curve);
  const d2 = (p: [number, number]) =>
    (p[0] - px) * (p[0] - px) + (p[1] - py) * (p[1] - py);
  const dLd = d2(pts.ld);
  const dHd = d2(pts.hd);
  if (dLd <= tolPx * tolPx && dLd <= dHd) {
    return "ld";
  }
  if (dHd <= tolPx * tolPx) {
    return "hd";
  }
  return null;
}

/** Apply a drag of the named control point to pixel (px, py). */
export function dragControlPoint(
  L: ChartLayout,
  curve: RadiusCurve,
  which: "hd" | "ld",
  px: number,
  py: number,
): RadiusCurve {
  if (which === "hd") {
    return projectHD(curve, denseFromX(L, px));
  }
  const sparseSide = L.sparseRange !== null && px < L.divider;
  const v = sparseSide ? sparseFromX(L, px) : denseFromX(L, px);
  return dragLDValues(curve, sparseSide ? "sparse" : "dense", v, rFromY(L, py), L.rMax);
}

const ZONE_FILL = "#dce8f5";
const CEIL_STROKE = "#4c78a8";
const CURVE_STROKE = "#e45756";
const HIST_FILL = "#c7c7c7";
const AXIS_STROKE = "#888888";

export function paintChart(
  ctx: CanvasRenderingContext2D,
  L: ChartLayout,
  curve: RadiusCurve,
  hist: Histogram | null,
): void {
  ctx.clearRect(0, 0, L.width, L.height);
  const x1 = L.width - L.right;
  const yFloor = yFromR(L, L.rPack1);
  const yBase = L.height - L.bottom;

  // feasible zone: under the packing ceiling on the dense side, the
  // full band above the floor on the sparse side
  ctx.fillStyle = ZONE_FILL;
  ctx.beginPath();
  ctx.moveTo(L.divider, yFloor);
  for (let i = 0; i <= 64; i++) {
    const d = L.dK + ((1 - L.dK) * i) / 64;
    ctx.lineTo(xFromDense(L, d), yFromR(L, curve.rPackAt(d)));
  }
  ctx.lineTo(x1, yFloor);
  ctx.closePath();
  ctx.fill();
  if (L.sparseRange !== null) {
    ctx.fillRect(L.left, yFromR(L, L.rMax), L.divider - L.left, yFloor - yFromR(L, L.rMax));
  }

  // histogram of node densities along the base line
  if (hist !== null && hist.max > hist.min) {
    let peak = 0;
    for (const c of hist.counts) {
      peak = Math.max(peak, c);
    }
    if (peak > 0) {
      ctx.fillStyle = HIST_FILL;
      const hMax = 0.22 * (yBase - L.top);
      const w = hist.binWidth;
      for (let b = 0; b < hist.counts.length; b++) {
        const d0 = hist.min + b * w;
        const d1 = d0 + w;
        if (d1 < L.dK) {
          continue;
        }
        const bx0 = xFromDense(L, Math.max(d0, L.dK));
        const bx1 = xFromDense(L, Math.min(d1, 1));
        const h = (hist.counts[b] / peak) * hMax;
        ctx.fillRect(bx0, yBase - h, Math.max(bx1 - bx0, 1), h);
      }
    }
  }

  // packing ceiling and floor
  ctx.strokeStyle = CEIL_STROKE;
  ctx.lineWidth = 1;
  ctx.setLineDash([4, 3]);
  ctx.beginPath();
  for (let i = 0; i <= 64; i++) {
    const d = L.dK + ((1 - L.dK) * i) / 64;
    const x = xFromDense(L, d);
    const y = yFromR(L, curve.rPackAt(d));
    if (i === 0) {
      ctx.moveTo(x, y);
    } else {
      ctx.lineTo(x, y);
    }
  }
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(L.left, yFloor);
  ctx.lineTo(x1, yFloor);
  ctx.stroke();
  ctx.setLineDash([]);

  // d_k divider
  if (L.sparseRange !== null) {
    ctx.strokeStyle = AXIS_STROKE;
    ctx.beginPath();
    ctx.moveTo(L.divider, L.top);
    ctx.lineTo(L.divider, yBase);
    ctx.stroke();
  }

  // the drawn-radius curve itself: a step over the sparse side, then
  // the dense evaluation
  ctx.strokeStyle = CURVE_STROKE;
  ctx.lineWidth = 2;
  ctx.beginPath();
  if (L.sparseRange !== null) {
    const [lo, hi] = L.sparseRange;
    if (curve.mode === LD_LEFT) {
      const xSplit = xFromSparse(L, clamp(curve.ld[0], lo, hi));
      ctx.moveTo(L.left, yFromR(L, curve.ld[1]));
      ctx.lineTo(xSplit, yFromR(L, curve.ld[1]));
      ctx.lineTo(xSplit, yFromR(L, curve.hd[1]));
      ctx.lineTo(L.divider, yFromR(L, curve.hd[1]));
    } else {
      ctx.moveTo(L.left, yFromR(L, curve.ld[1]));
      ctx.lineTo(L.divider, yFromR(L, curve.ld[1]));
    }
  }
  for (let i = 0; i <= 128; i++) {
    const d = L.dK + ((1 - L.dK) * i) / 128;
    const x = xFromDense(L, d);
    const y = yFromR(L, curve.evaluate(d, null));
    if (i === 0 && L.sparseRange === null) {
      ctx.moveTo(x, y);
    } else {
      ctx.lineTo(x, y);
    }
  }
  ctx.stroke();

  // axes
  ctx.strokeStyle = AXIS_STROKE;
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(L.left, L.top);
  ctx.lineTo(L.left, yBase);
  ctx.lineTo(x1, yBase);
  ctx.stroke();
  ctx.fillStyle = AXIS_STROKE;
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  ctx.fillText("d_k", L.divider, yBase + 14);
  ctx.fillText("1", x1, yBase + 14);
  if (L.sparseRange !== null) {
    ctx.fillText("local", (L.left + L.divider) / 2, yBase + 26);
  }
  ctx.fillText("cell density", (L.divider + x1) / 2, yBase + 26);
  ctx.textAlign = "right";
  ctx.fillText(L.rPack1.toPrecision(3), L.left - 4, yFloor + 4);
  ctx.fillText(L.rMax.toPrecision(3), L.left - 4, L.top + 8);

  // control point handles
  const pts = controlPointPx(L, curve);
  for (const [name, p] of [
    ["hd", pts.hd],
    ["ld", pts.ld],
  ] as const) {
    ctx.beginPath();
    ctx.arc(p[0], p[1], 6, 0, 2 * Math.PI);
    ctx.fillStyle = name === "hd" ? CEIL_STROKE : CURVE_STROKE;
    ctx.fill();
    ctx.strokeStyle = "#ffffff";
    ctx.stroke();
  }
}

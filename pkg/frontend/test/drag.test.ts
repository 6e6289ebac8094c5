/**
 * Curve editor behavior: scale round trips, control point dragging
 * (projection for hd, clamping for ld, mode switch across the d_k
 * divider), and the safety invariant that no drag can ever produce a
 * curve above the packing ceiling for densities at or above d_k.
 */

import { describe, expect, it } from "vitest";

import {
  ChartLayout,
  controlPointPx,
  denseFromX,
  dragControlPoint,
  hitControlPoint,
  makeChartLayout,
  rFromY,
  sparseFromX,
  xFromDense,
  xFromSparse,
  yFromR,
} from "../src/chart.js";
import { defaultCurve, LD_LEFT, LD_RIGHT, RadiusCurve } from "../src/curve.js";
import { relErr, seededRng, vectors } from "./util.js";

const sample = vectors.sample_layout;
const dK = sample.d_k;
const r1 = sample.r_pack1;
const srange: [number, number] = [sample.sparse_range[0], sample.sparse_range[1]];
const L = makeChartLayout(460, 300, dK, r1, srange);

function freshCurve(): RadiusCurve {
  return defaultCurve(dK, r1, srange);
}

describe("chart scales", () => {
  it("round-trips the dense axis", () => {
    for (const d of [dK, (dK + 1) / 2, 0.7, 1]) {
      expect(relErr(denseFromX(L, xFromDense(L, d)), d)).toBeLessThan(1e-12);
    }
  });

  it("round-trips the sparse axis", () => {
    const [lo, hi] = srange;
    for (const v of [lo, (lo + hi) / 2, hi]) {
      expect(relErr(sparseFromX(L, xFromSparse(L, v)), v)).toBeLessThan(1e-12);
    }
  });

  it("round-trips the radius axis", () => {
    for (const r of [0, r1, L.rMax / 2, L.rMax]) {
      expect(Math.abs(rFromY(L, yFromR(L, r)) - r)).toBeLessThan(1e-12 * L.rMax);
    }
  });

  it("places the default control points on floor and divider", () => {
    const pts = controlPointPx(L, freshCurve());
    expect(pts.hd[0]).toBeCloseTo(L.width - L.right, 9);
    expect(pts.hd[1]).toBeCloseTo(yFromR(L, r1), 9);
    expect(pts.ld[0]).toBeCloseTo(L.divider, 9);
  });

  it("omits the sparse axis when there is no sparse range", () => {
    const flat = makeChartLayout(460, 300, dK, r1, null);
    expect(flat.divider).toBe(flat.left);
  });
});

describe("hit testing", () => {
  it("finds each control point and misses empty space", () => {
    const curve = freshCurve();
    const pts = controlPointPx(L, curve);
    expect(hitControlPoint(L, curve, pts.hd[0] - 3, pts.hd[1] + 2)).toBe("hd");
    expect(hitControlPoint(L, curve, pts.ld[0] + 4, pts.ld[1] - 3)).toBe("ld");
    expect(hitControlPoint(L, curve, L.left + 2, L.top + 2)).toBeNull();
  });

  it("prefers ld when the points coincide", () => {
    const curve = freshCurve();
    // default hd sits at d=1, ld at d_k; drag ld on top of hd
    const stacked = dragControlPoint(L, curve, "ld", xFromDense(L, 1), yFromR(L, r1));
    const pts = controlPointPx(L, stacked);
    expect(hitControlPoint(L, stacked, pts.hd[0], pts.hd[1])).toBe("ld");
  });
});

describe("hd dragging", () => {
  it("always lands on the packing-radius curve", () => {
    const rng = seededRng(11);
    let curve = freshCurve();
    for (let i = 0; i < 200; i++) {
      const px = -40 + rng() * (L.width + 80);
      const py = -40 + rng() * (L.height + 80);
      curve = dragControlPoint(L, curve, "hd", px, py);
      const want = curve.rPack1 / Math.sqrt(Math.max(curve.hd[0], curve.dK));
      expect(relErr(curve.hd[1], want)).toBeLessThanOrEqual(1e-6);
      expect(curve.hd[0]).toBeGreaterThanOrEqual(dK);
      expect(curve.hd[0]).toBeLessThanOrEqual(1);
    }
  });

  it("dropped at d=1 reduces the curve to the default", () => {
    let curve = freshCurve();
    curve = dragControlPoint(L, curve, "hd", xFromDense(L, 0.3), 50);
    expect(curve.hd[0]).toBeLessThan(1);
    curve = dragControlPoint(L, curve, "hd", L.width + 60, 50);
    const dflt = freshCurve();
    expect(curve.hd).toEqual(dflt.hd);
    expect(curve.ld).toEqual(dflt.ld);
    expect(curve.mode).toBe(dflt.mode);
  });

  it("pulls a stranded ld point back with it", () => {
    let curve = freshCurve();
    // park ld at a high density, then drag hd to the left of it
    curve = dragControlPoint(L, curve, "ld", xFromDense(L, 0.8), yFromR(L, r1));
    expect(curve.ld[0]).toBeCloseTo(0.8, 9);
    curve = dragControlPoint(L, curve, "hd", xFromDense(L, 0.5), 50);
    expect(curve.ld[0]).toBeLessThanOrEqual(curve.hd[0]);
  });
});

describe("ld dragging", () => {
  it("clamps to the feasible zone instead of rejecting", () => {
    let curve = freshCurve();
    const d = dK + (1 - dK) * 0.4;
    const px = xFromDense(L, d);
    // way above the ceiling: lands on the ceiling
    curve = dragControlPoint(L, curve, "ld", px, -100);
    expect(curve.ld[1]).toBeCloseTo(curve.rPackAt(curve.ld[0]), 9);
    // way below the floor: lands on the floor
    curve = dragControlPoint(L, curve, "ld", px, L.height + 100);
    expect(curve.ld[1]).toBe(r1);
    // far right of hd: pinned at hd's density
    curve = dragControlPoint(L, curve, "ld", L.width + 200, yFromR(L, r1));
    expect(curve.ld[0]).toBe(curve.hd[0]);
  });

  it("switches to ld_left when dragged across the divider", () => {
    let curve = freshCurve();
    expect(curve.mode).toBe(LD_RIGHT);
    curve = dragControlPoint(
      L,
      curve,
      "ld",
      xFromSparse(L, (srange[0] + srange[1]) / 2),
      yFromR(L, r1 * 1.5),
    );
    expect(curve.mode).toBe(LD_LEFT);
    expect(curve.ld[0]).toBeGreaterThanOrEqual(srange[0]);
    expect(curve.ld[0]).toBeLessThanOrEqual(srange[1]);
  });

  it("switches back to ld_right when dragged right of the divider", () => {
    let curve = freshCurve();
    curve = dragControlPoint(L, curve, "ld", L.left + 5, yFromR(L, r1 * 2));
    expect(curve.mode).toBe(LD_LEFT);
    curve = dragControlPoint(L, curve, "ld", xFromDense(L, 0.3), yFromR(L, r1));
    expect(curve.mode).toBe(LD_RIGHT);
    expect(curve.ld[0]).toBeGreaterThanOrEqual(dK);
    expect(curve.ld[0]).toBeLessThanOrEqual(curve.hd[0]);
  });

  it("clamps sparse drags past either end of the range", () => {
    let curve = freshCurve();
    curve = dragControlPoint(L, curve, "ld", L.left - 50, yFromR(L, r1 * 1.5));
    expect(curve.mode).toBe(LD_LEFT);
    expect(curve.ld[0]).toBe(srange[0]);
    // above the chart top: capped at the chart's rMax
    curve = dragControlPoint(L, curve, "ld", L.left + 5, -300);
    expect(curve.ld[1]).toBe(L.rMax);
  });

  it("stays in ld_right on a chart without a sparse axis", () => {
    const flat = makeChartLayout(460, 300, dK, r1, null);
    let curve = defaultCurve(dK, r1);
    curve = dragControlPoint(flat, curve, "ld", flat.left - 80, yFromR(flat, r1 * 2));
    expect(curve.mode).toBe(LD_RIGHT);
    expect(curve.ld[0]).toBe(dK);
  });
});

describe("drag safety invariant", () => {
  function assertSafe(curve: RadiusCurve, chart: ChartLayout): void {
    for (let i = 0; i <= 16; i++) {
      const d = curve.dK + (1 - curve.dK) * (i / 16);
      const ceiling = curve.rPackAt(d);
      expect(curve.evaluate(d)).toBeLessThanOrEqual(ceiling * (1 + 1e-9));
    }
    expect(curve.ld[1]).toBeGreaterThanOrEqual(curve.rPack1 * (1 - 1e-12));
    expect(curve.ld[1]).toBeLessThanOrEqual(chart.rMax * (1 + 1e-12));
  }

  it("holds through five hundred random drags", () => {
    const rng = seededRng(2026);
    let curve = freshCurve();
    for (let step = 0; step < 500; step++) {
      const which = rng() < 0.4 ? "hd" : "ld";
      const px = -80 + rng() * (L.width + 160);
      const py = -80 + rng() * (L.height + 160);
      curve = dragControlPoint(L, curve, which, px, py); // must not throw
      assertSafe(curve, L);
    }
  });
});

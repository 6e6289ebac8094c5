/**
 * Node-level agreement with the layout engine on a real packed layout:
 * local densities, the sparse range derived from them, and full r_draw
 * arrays for one curve of each mode.
 */

import { describe, expect, it } from "vitest";

import { CurveDoc, RadiusCurve } from "../src/curve.js";
import { localDensity } from "../src/localdensity.js";
import { buildUniqueDensities, nodeRadii } from "../src/renderer.js";
import { makeNodes, relErr, vectors } from "./util.js";

const sample = vectors.sample_layout;
const xs = Float64Array.from(sample.nodes.map((n) => n.x));
const ys = Float64Array.from(sample.nodes.map((n) => n.y));
const density = Float64Array.from(sample.nodes.map((n) => n.density));

describe("local density on packed coordinates", () => {
  it("matches the engine within 1e-9 relative on every node", () => {
    const local = localDensity(xs, ys);
    expect(local.length).toBe(sample.local.length);
    let worst = 0;
    for (let i = 0; i < local.length; i++) {
      worst = Math.max(worst, relErr(local[i], sample.local[i]));
    }
    expect(worst).toBeLessThanOrEqual(1e-9);
  });

  it("reproduces the sparse range", () => {
    const local = localDensity(xs, ys);
    let lo = Infinity;
    let hi = -Infinity;
    for (let i = 0; i < density.length; i++) {
      if (density[i] < sample.d_k) {
        lo = Math.min(lo, local[i]);
        hi = Math.max(hi, local[i]);
      }
    }
    expect(lo).toBeLessThanOrEqual(hi); // the sample layout has sparse nodes
    expect(relErr(lo, sample.sparse_range[0])).toBeLessThanOrEqual(1e-9);
    expect(relErr(hi, sample.sparse_range[1])).toBeLessThanOrEqual(1e-9);
  });
});

describe("r_draw recomputation", () => {
  const local = localDensity(xs, ys);

  it("covers both curve modes", () => {
    const modes = new Set(sample.applied.map((a) => a.curve.mode));
    expect(modes).toEqual(new Set(["ld_right", "ld_left"]));
  });

  for (const applied of sample.applied) {
    it(`matches the engine for the ${applied.curve.mode} curve`, () => {
      const curve = RadiusCurve.fromDoc(applied.curve as CurveDoc);
      const radii = curve.evaluateMany(density, local);
      let worst = 0;
      for (let i = 0; i < radii.length; i++) {
        worst = Math.max(worst, relErr(radii[i], applied.r_draw[i]));
      }
      expect(worst).toBeLessThanOrEqual(1e-9);
    });

    it(`matches through the per-frame table path for the ${applied.curve.mode} curve`, () => {
      const curve = RadiusCurve.fromDoc(applied.curve as CurveDoc);
      const nodes = makeNodes(xs, ys, density);
      const uniq = buildUniqueDensities(density);
      const radii = nodeRadii(nodes, uniq, curve, local);
      for (let i = 0; i < radii.length; i++) {
        expect(relErr(radii[i], applied.r_draw[i])).toBeLessThanOrEqual(1e-9);
      }
    });
  }
});

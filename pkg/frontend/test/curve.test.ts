import { describe, expect, it } from "vitest";

import {
  CurveDoc,
  CurveError,
  defaultCurve,
  LD_LEFT,
  LD_RIGHT,
  RadiusCurve,
} from "../src/curve.js";
import { exportCurveText, parseCurveDoc } from "../src/layoutDoc.js";
import { relErr, vectors } from "./util.js";

describe("evaluation against engine-generated vectors", () => {
  it("matches every vector within 1e-9 relative", () => {
    let total = 0;
    let worst = 0;
    for (const c of vectors.evaluate_cases) {
      const curve = RadiusCurve.fromDoc(c.curve as CurveDoc);
      for (const inp of c.inputs) {
        const got = curve.evaluate(inp.density, inp.local);
        worst = Math.max(worst, relErr(got, inp.expected));
        total++;
      }
    }
    expect(total).toBeGreaterThanOrEqual(100);
    expect(worst).toBeLessThanOrEqual(1e-9);
  });

  it("agrees bit for bit on the same inputs", () => {
    // Stronger than the 1e-9 contract: the arithmetic is the same
    // sequence of correctly-rounded operations, so the doubles should
    // come out identical. If this ever fires on some platform while
    // the 1e-9 test passes, this assertion is the one to relax.
    for (const c of vectors.evaluate_cases) {
      const curve = RadiusCurve.fromDoc(c.curve as CurveDoc);
      for (const inp of c.inputs) {
        expect(curve.evaluate(inp.density, inp.local)).toBe(inp.expected);
      }
    }
  });
});

describe("branch selection", () => {
  const dK = 0.04;
  const r1 = 1.0;

  it("default curve renders everything at r_pack1", () => {
    const curve = defaultCurve(dK, r1);
    for (const d of [0.001, dK, 0.1, 0.5, 1.0]) {
      expect(curve.evaluate(d)).toBe(r1);
    }
  });

  it("ld_right: floor, plateau and tail in order", () => {
    const curve = new RadiusCurve([0.64, 1.25], [0.16, 2.0], dK, r1, LD_RIGHT);
    expect(curve.evaluate(0.01)).toBe(2.0); // sparse
    expect(curve.evaluate(0.1)).toBe(2.0); // below ld
    expect(curve.evaluate(0.16)).toBe(1.25); // plateau starts at ld
    expect(curve.evaluate(0.5)).toBe(1.25);
    expect(curve.evaluate(0.64)).toBe(1.25); // plateau ends at hd
    expect(curve.evaluate(0.81)).toBeCloseTo(1 / 0.9, 12); // packing tail
    expect(curve.evaluate(1.0)).toBe(1.0);
  });

  it("ld_left: sparse nodes split on local density", () => {
    const curve = new RadiusCurve(
      [0.64, 1.25],
      [3.0, 1.7],
      dK,
      r1,
      LD_LEFT,
      [1.0, 5.0],
    );
    expect(curve.evaluate(0.01, 2.0)).toBe(1.7); // local below split
    expect(curve.evaluate(0.01, 3.0)).toBe(1.7); // split itself
    expect(curve.evaluate(0.01, 4.0)).toBe(1.25); // local above split
    expect(curve.evaluate(0.5, null)).toBe(1.25); // dense ignores local
    expect(() => curve.evaluate(0.01, null)).toThrow(CurveError);
  });
});

describe("construction validation", () => {
  const dK = 0.04;
  const r1 = 1.0;
  const ok: [number, number] = [0.64, 1.25];

  const cases: Array<[string, () => RadiusCurve]> = [
    [
      "unknown mode",
      () => new RadiusCurve(ok, [0.16, 1.0], dK, r1, "sideways" as never),
    ],
    ["d_k of zero", () => new RadiusCurve(ok, [0.16, 1.0], 0, r1)],
    ["d_k above one", () => new RadiusCurve(ok, [0.16, 1.0], 1.5, r1)],
    ["non-positive r_pack1", () => new RadiusCurve(ok, [0.16, 1.0], dK, 0)],
    ["NaN control point", () => new RadiusCurve([NaN, 1.25], [0.16, 1.0], dK, r1)],
    ["hd density below d_k", () => new RadiusCurve([0.02, 7.07], [0.02, 1.0], dK, r1)],
    ["hd density above one", () => new RadiusCurve([1.2, 0.91], [0.16, 1.0], dK, r1)],
    ["hd off the packing curve", () => new RadiusCurve([0.64, 1.3], [0.16, 1.0], dK, r1)],
    ["ld radius below the floor", () => new RadiusCurve(ok, [0.16, 0.9], dK, r1)],
    ["ld right of hd", () => new RadiusCurve(ok, [0.8, 1.0], dK, r1)],
    ["ld above the packing curve", () => new RadiusCurve(ok, [0.16, 2.6], dK, r1)],
    ["ld_left without a sparse range", () => new RadiusCurve(ok, [2.0, 1.5], dK, r1, LD_LEFT)],
    [
      "sparse range with non-positive low end",
      () => new RadiusCurve(ok, [2.0, 1.5], dK, r1, LD_LEFT, [0, 5]),
    ],
    [
      "inverted sparse range",
      () => new RadiusCurve(ok, [2.0, 1.5], dK, r1, LD_LEFT, [5, 1]),
    ],
    [
      "split outside the sparse range",
      () => new RadiusCurve(ok, [9.0, 1.5], dK, r1, LD_LEFT, [1, 5]),
    ],
  ];

  for (const [name, build] of cases) {
    it(`rejects ${name}`, () => {
      expect(build).toThrow(CurveError);
    });
  }

  it("accepts points within the stated tolerances", () => {
    const ceiling = r1 / Math.sqrt(0.64);
    const justOff: [number, number] = [0.64, ceiling * (1 + 0.5e-9)];
    expect(() => new RadiusCurve(justOff, [0.16, 1.0], dK, r1)).not.toThrow();
    const justUnderFloor: [number, number] = [0.16, r1 * (1 - 0.5e-12)];
    expect(() => new RadiusCurve(ok, justUnderFloor, dK, r1)).not.toThrow();
  });
});

describe("curve file format", () => {
  it("parses the file the engine writes and reproduces it byte for byte", () => {
    const curve = parseCurveDoc(vectors.curve_file);
    expect(exportCurveText(curve)).toBe(vectors.curve_file);
  });

  it("round-trips through toDoc/fromDoc", () => {
    const sample = vectors.sample_layout;
    for (const applied of sample.applied) {
      const curve = RadiusCurve.fromDoc(applied.curve as CurveDoc);
      const again = RadiusCurve.fromDoc(curve.toDoc());
      expect(again.hd).toEqual(curve.hd);
      expect(again.ld).toEqual(curve.ld);
      expect(again.dK).toBe(curve.dK);
      expect(again.rPack1).toBe(curve.rPack1);
      expect(again.mode).toBe(curve.mode);
      expect(again.sparseRange).toEqual(curve.sparseRange);
    }
  });

  it("writes keys in sorted order with a trailing newline", () => {
    const text = exportCurveText(defaultCurve(0.1, 2));
    expect(text.endsWith("\n")).toBe(true);
    expect(Object.keys(JSON.parse(text))).toEqual([
      "d_k",
      "hd",
      "ld",
      "mode",
      "r_pack1",
      "sparse_range",
    ]);
  });

  it("defaults a missing mode to ld_right", () => {
    const curve = parseCurveDoc(
      JSON.stringify({ hd: [1, 2], ld: [0.1, 2], d_k: 0.1, r_pack1: 2 }),
    );
    expect(curve.mode).toBe(LD_RIGHT);
  });
});

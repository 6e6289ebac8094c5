import { describe, expect, it } from "vitest";

import { LoadError, parseCurveDoc, parseLayoutDoc } from "../src/layoutDoc.js";

function goodDoc(): Record<string, unknown> {
  return {
    params: { size: 2.0, k: 5, th: 0.5, seed: 0, epsilon: 1e-9 },
    bbox: [-10, -5, 10, 5],
    d_k: 0.125,
    r_pack1: 0.4,
    num_max: 8,
    canvas: { width: 640, height: 480 },
    nodes: [
      { id: 0, x: 1.5, y: -2, r_pack: 0.4, r_draw: 0.4, density: 0.5, category: "a" },
      { id: 1, x: -3, y: 0.25, r_pack: 0.4, r_draw: 0.6, density: 0.25, category: "b" },
      { id: 2, x: 4, y: 2, r_pack: 0.4, r_draw: 0.4, density: 0.5, category: "a" },
    ],
  };
}

describe("parseLayoutDoc", () => {
  it("reads a well-formed document into column arrays", () => {
    const doc = parseLayoutDoc(JSON.stringify(goodDoc()));
    expect(doc.dK).toBe(0.125);
    expect(doc.rPack1).toBe(0.4);
    expect(doc.numMax).toBe(8);
    expect(doc.bbox).toEqual([-10, -5, 10, 5]);
    expect(doc.canvas).toEqual({ width: 640, height: 480 });
    expect(doc.nodes.count).toBe(3);
    expect(Array.from(doc.nodes.x)).toEqual([1.5, -3, 4]);
    expect(Array.from(doc.nodes.density)).toEqual([0.5, 0.25, 0.5]);
    expect(doc.nodes.categories).toEqual(["a", "b"]);
    expect(Array.from(doc.nodes.colorIndex)).toEqual([0, 1, 0]);
  });

  it("tolerates a missing canvas block and missing categories", () => {
    const raw = goodDoc();
    delete raw["canvas"];
    for (const row of raw["nodes"] as Array<Record<string, unknown>>) {
      delete row["category"];
    }
    const doc = parseLayoutDoc(JSON.stringify(raw));
    expect(doc.canvas).toEqual({ width: 800, height: 800 });
    expect(doc.nodes.categories).toEqual([]);
  });

  const badCases: Array<[string, (raw: Record<string, unknown>) => unknown, RegExp]> = [
    ["missing d_k", (raw) => delete raw["d_k"], /d_k/],
    [
      "string where a number belongs",
      (raw) => (((raw["nodes"] as unknown[])[1] as Record<string, unknown>)["x"] = "wide"),
      /"x" must be a finite number/,
    ],
    ["short bbox", (raw) => (raw["bbox"] = [0, 0, 1]), /bbox/],
    ["non-numeric bbox entry", (raw) => (raw["bbox"] = [0, 0, 1, "top"]), /bbox\[3\]/],
    ["empty node list", (raw) => (raw["nodes"] = []), /non-empty/],
    ["node that is not an object", (raw) => ((raw["nodes"] as unknown[])[0] = 7), /nodes\[0\]/],
    [
      "numeric category",
      (raw) => (((raw["nodes"] as unknown[])[2] as Record<string, unknown>)["category"] = 3),
      /category/,
    ],
  ];

  for (const [name, mutate, pattern] of badCases) {
    it(`rejects ${name} with a pointed message`, () => {
      const raw = goodDoc();
      mutate(raw);
      expect(() => parseLayoutDoc(JSON.stringify(raw))).toThrow(LoadError);
      expect(() => parseLayoutDoc(JSON.stringify(raw))).toThrow(pattern);
    });
  }

  it("rejects text that is not JSON", () => {
    expect(() => parseLayoutDoc("{\"nodes\": [")).toThrow(/not valid JSON/);
  });

  it("rejects a top-level array", () => {
    expect(() => parseLayoutDoc("[1, 2]")).toThrow(/top level/);
  });
});

describe("parseCurveDoc", () => {
  it("rejects invalid JSON", () => {
    expect(() => parseCurveDoc("nope")).toThrow(LoadError);
  });

  it("wraps construction errors with context", () => {
    const bad = { hd: [1, 2], ld: [0.1, 0.5], d_k: 0.1, r_pack1: 2, mode: "ld_right" };
    expect(() => parseCurveDoc(JSON.stringify(bad))).toThrow(/curve JSON:/);
  });

  it("wraps structural garbage too", () => {
    expect(() => parseCurveDoc("{\"hd\": 5}")).toThrow(LoadError);
  });
});

/** Shared test helpers: the engine-generated vectors and a seeded RNG. */

import raw from "./vectors.json";
import { NodeArrays } from "../src/layoutDoc.js";

export interface CurveDocJson {
  hd: [number, number];
  ld: [number, number];
  d_k: number;
  r_pack1: number;
  mode: string;
  sparse_range: [number, number] | null;
}

export interface EvalInput {
  density: number;
  local: number | null;
  expected: number;
}

export interface EvalCase {
  curve: CurveDocJson;
  inputs: EvalInput[];
}

export interface SampleLayout {
  d_k: number;
  r_pack1: number;
  sparse_range: [number, number];
  nodes: { x: number; y: number; density: number }[];
  local: number[];
  applied: { curve: CurveDocJson; r_draw: number[] }[];
}

export interface Vectors {
  evaluate_cases: EvalCase[];
  sample_layout: SampleLayout;
  curve_file: string;
}

export const vectors = raw as unknown as Vectors;

export function relErr(got: number, want: number): number {
  if (want === 0) {
    return Math.abs(got);
  }
  return Math.abs(got - want) / Math.abs(want);
}

/** Deterministic 32-bit RNG (mulberry32), returns floats in [0, 1). */
export function seededRng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function makeNodes(
  x: Float64Array,
  y: Float64Array,
  density: Float64Array,
): NodeArrays {
  const n = x.length;
  const ids = new Int32Array(n);
  for (let i = 0; i < n; i++) {
    ids[i] = i;
  }
  return {
    ids,
    x,
    y,
    rPack: new Float64Array(n),
    rDraw: new Float64Array(n),
    density,
    colorIndex: new Uint16Array(n),
    categories: [],
    count: n,
  };
}

/**
 * Parsing and validation of the files the viewer consumes: layout.json
 * from the CLI, and the rendering-radius curve JSON shared with the
 * --curve flag. Parsing failures throw LoadError with a message meant
 * for the status line, not the console.
 */

import { CurveDoc, CurveError, RadiusCurve } from "./curve.js";

export class LoadError extends Error {}

/** Column-oriented node data, friendlier to per-frame loops. */
export interface NodeArrays {
  ids: Int32Array;
  x: Float64Array;
  y: Float64Array;
  rPack: Float64Array;
  rDraw: Float64Array;
  density: Float64Array;
  /** palette index per node; derived from the category strings */
  colorIndex: Uint16Array;
  categories: string[];
  count: number;
}

export interface LayoutDoc {
  dK: number;
  rPack1: number;
  numMax: number;
  bbox: [number, number, number, number];
  canvas: { width: number; height: number };
  nodes: NodeArrays;
}

function fail(msg: string): never {
  throw new LoadError(`layout.json: ${msg}`);
}

function requireNumber(obj: Record<string, unknown>, key: string): number {
  const v = obj[key];
  if (typeof v !== "number" || !Number.isFinite(v)) {
    fail(`field "${key}" must be a finite number`);
  }
  return v;
}

export function parseLayoutDoc(text: string): LayoutDoc {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (e) {
    fail(`not valid JSON (${(e as Error).message})`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    fail("top level must be an object");
  }
  const doc = raw as Record<string, unknown>;
  const dK = requireNumber(doc, "d_k");
  const rPack1 = requireNumber(doc, "r_pack1");
  const numMax = requireNumber(doc, "num_max");
  const bboxRaw = doc["bbox"];
  if (!Array.isArray(bboxRaw) || bboxRaw.length !== 4) {
    fail('field "bbox" must be a 4-number array');
  }
  const bbox = bboxRaw.map((v, i) => {
    if (typeof v !== "number" || !Number.isFinite(v)) {
      fail(`bbox[${i}] must be a finite number`);
    }
    return v;
  }) as [number, number, number, number];

  const canvasRaw = doc["canvas"];
  let canvas = { width: 800, height: 800 };
  if (typeof canvasRaw === "object" && canvasRaw !== null) {
    const c = canvasRaw as Record<string, unknown>;
    canvas = {
      width: requireNumber(c, "width"),
      height: requireNumber(c, "height"),
    };
  }

  const rows = doc["nodes"];
  if (!Array.isArray(rows) || rows.length === 0) {
    fail('field "nodes" must be a non-empty array');
  }
  const n = rows.length;
  const nodes: NodeArrays = {
    ids: new Int32Array(n),
    x: new Float64Array(n),
    y: new Float64Array(n),
    rPack: new Float64Array(n),
    rDraw: new Float64Array(n),
    density: new Float64Array(n),
    colorIndex: new Uint16Array(n),
    categories: [],
    count: n,
  };
  const palette = new Map<string, number>();
  for (let i = 0; i < n; i++) {
    const row = rows[i];
    if (typeof row !== "object" || row === null) {
      fail(`nodes[${i}] must be an object`);
    }
    const r = row as Record<string, unknown>;
    nodes.ids[i] = requireNumber(r, "id");
    nodes.x[i] = requireNumber(r, "x");
    nodes.y[i] = requireNumber(r, "y");
    nodes.rPack[i] = requireNumber(r, "r_pack");
    nodes.rDraw[i] = requireNumber(r, "r_draw");
    nodes.density[i] = requireNumber(r, "density");
    const cat = r["category"];
    if (cat !== undefined) {
      if (typeof cat !== "string") {
        fail(`nodes[${i}].category must be a string`);
      }
      let idx = palette.get(cat);
      if (idx === undefined) {
        idx = palette.size;
        palette.set(cat, idx);
        nodes.categories.push(cat);
      }
      nodes.colorIndex[i] = idx;
    }
  }
  return { dK, rPack1, numMax, bbox, canvas, nodes };
}

export function parseCurveDoc(text: string): RadiusCurve {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (e) {
    throw new LoadError(`curve JSON: not valid JSON (${(e as Error).message})`);
  }
  try {
    return RadiusCurve.fromDoc(raw as CurveDoc);
  } catch (e) {
    if (e instanceof CurveError) {
      throw new LoadError(`curve JSON: ${e.message}`);
    }
    throw new LoadError("curve JSON: malformed curve document");
  }
}

/** Curve JSON text in the format the CLI's --curve flag reads. */
export function exportCurveText(curve: RadiusCurve): string {
  const doc = curve.toDoc();
  const ordered: Record<string, unknown> = {};
  for (const key of Object.keys(doc).sort()) {
    ordered[key] = doc[key as keyof CurveDoc];
  }
  return `${JSON.stringify(ordered, null, 2)}\n`;
}

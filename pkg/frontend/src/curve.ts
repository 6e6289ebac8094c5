/**
 * Rendering-radius curve over node density.
 *
 * Field-for-field mirror of the layout engine's curve model, including
 * its construction tolerances and branch order, so that radii computed
 * in the browser agree with the CLI to floating-point accuracy. The
 * wire format (CurveDoc) is the same JSON the CLI's --curve flag
 * consumes.
 */

export const LD_LEFT = "ld_left";
export const LD_RIGHT = "ld_right";
export type CurveMode = typeof LD_LEFT | typeof LD_RIGHT;

/** Curve JSON as written by save_curve and read by --curve. */
export interface CurveDoc {
  hd: [number, number];
  ld: [number, number];
  d_k: number;
  r_pack1: number;
  mode: string;
  sparse_range: [number, number] | null;
}

export class CurveError extends Error {}

/** Tolerance for the floor and the ld ceiling. */
const REL_TOL = 1e-12;

function finite(...vals: number[]): boolean {
  return vals.every((v) => Number.isFinite(v));
}

export class RadiusCurve {
  readonly hd: readonly [number, number];
  readonly ld: readonly [number, number];
  readonly dK: number;
  readonly rPack1: number;
  readonly mode: CurveMode;
  readonly sparseRange: readonly [number, number] | null;
  readonly epsilon: number;

  constructor(
    hd: readonly [number, number],
    ld: readonly [number, number],
    dK: number,
    rPack1: number,
    mode: CurveMode = LD_RIGHT,
    sparseRange: readonly [number, number] | null = null,
    epsilon = 1e-9,
  ) {
    if (mode !== LD_LEFT && mode !== LD_RIGHT) {
      throw new CurveError(`unknown mode ${JSON.stringify(mode)}`);
    }
    if (!finite(dK, rPack1) || !(dK > 0 && dK <= 1 && rPack1 > 0)) {
      throw new CurveError("d_k must be in (0, 1] and r_pack1 positive");
    }
    const [dHd, rHd] = hd;
    const [dLd, rLd] = ld;
    if (!finite(dHd, rHd, dLd, rLd)) {
      throw new CurveError("control points must be finite");
    }
    if (!(dK <= dHd && dHd <= 1)) {
      throw new CurveError("hd density must lie in [d_k, 1]");
    }
    const ceiling = rPack1 / Math.sqrt(Math.max(dHd, dK));
    if (Math.abs(rHd - ceiling) > epsilon * ceiling) {
      throw new CurveError("hd point must sit on the packing-radius curve");
    }
    if (rLd < rPack1 * (1 - REL_TOL)) {
      throw new CurveError("ld radius must not drop below r_pack1");
    }
    if (mode === LD_RIGHT) {
      if (!(dK <= dLd && dLd <= dHd)) {
        throw new CurveError("ld density must lie in [d_k, hd density]");
      }
      const ldCeiling = rPack1 / Math.sqrt(Math.max(dLd, dK));
      if (rLd > ldCeiling * (1 + REL_TOL)) {
        throw new CurveError("ld point exceeds the packing-radius curve");
      }
    } else {
      if (sparseRange === null) {
        throw new CurveError("ld_left mode needs a sparse density range");
      }
      const [lo, hi] = sparseRange;
      if (!(finite(lo, hi) && lo > 0 && lo <= hi)) {
        throw new CurveError("invalid sparse density range");
      }
      if (!(lo <= dLd && dLd <= hi)) {
        throw new CurveError("ld density must lie inside the sparse range");
      }
    }
    this.hd = [dHd, rHd];
    this.ld = [dLd, rLd];
    this.dK = dK;
    this.rPack1 = rPack1;
    this.mode = mode;
    this.sparseRange = sparseRange === null ? null : [sparseRange[0], sparseRange[1]];
    this.epsilon = epsilon;
  }

  /** Packing radius of a cell with the given density (flat below d_k). */
  rPackAt(density: number): number {
    return this.rPack1 / Math.sqrt(Math.max(density, this.dK));
  }

  /**
   * Rendering radius for one node. `local` is consulted only for
   * sparse nodes (density < d_k) in ld_left mode.
   */
  evaluate(density: number, local: number | null = null): number {
    if (density < this.dK) {
      if (this.mode === LD_RIGHT) {
        return this.ld[1];
      }
      if (local === null) {
        throw new CurveError("sparse node in ld_left mode needs a local density");
      }
      return local <= this.ld[0] ? this.ld[1] : this.hd[1];
    }
    if (this.mode === LD_RIGHT && density < this.ld[0]) {
      return this.ld[1];
    }
    if (density <= this.hd[0]) {
      return this.hd[1];
    }
    return this.rPackAt(density);
  }

  /** Bulk twin of evaluate, same branch conventions. */
  evaluateMany(
    density: Float64Array,
    local: Float64Array | null = null,
  ): Float64Array {
    const out = new Float64Array(density.length);
    for (let i = 0; i < density.length; i++) {
      const d = density[i];
      out[i] = this.evaluate(
        d,
        d < this.dK && local !== null ? local[i] : null,
      );
    }
    return out;
  }

  toDoc(): CurveDoc {
    return {
      hd: [this.hd[0], this.hd[1]],
      ld: [this.ld[0], this.ld[1]],
      d_k: this.dK,
      r_pack1: this.rPack1,
      mode: this.mode,
      sparse_range:
        this.sparseRange === null
          ? null
          : [this.sparseRange[0], this.sparseRange[1]],
    };
  }

  static fromDoc(doc: CurveDoc): RadiusCurve {
    const mode = doc.mode ?? LD_RIGHT;
    return new RadiusCurve(
      [doc.hd[0], doc.hd[1]],
      [doc.ld[0], doc.ld[1]],
      doc.d_k,
      doc.r_pack1,
      mode as CurveMode,
      doc.sparse_range === null || doc.sparse_range === undefined
        ? null
        : [doc.sparse_range[0], doc.sparse_range[1]],
    );
  }
}

/** The identity configuration: every node renders at r_pack1. */
export function defaultCurve(
  dK: number,
  rPack1: number,
  sparseRange: readonly [number, number] | null = null,
): RadiusCurve {
  return new RadiusCurve(
    [1, rPack1],
    [dK, rPack1],
    dK,
    rPack1,
    LD_RIGHT,
    sparseRange,
  );
}

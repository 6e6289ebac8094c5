/**
 * Local density of layout nodes: the reciprocal of the mean distance
 * to the nearest neighbors, computed over the packed coordinates. Only
 * sparse nodes consult it (ld_left curves), but neighbors are searched
 * among all nodes, matching the layout engine.
 */

export const LOCAL_DENSITY_NEIGHBORS = 5;

interface Grid {
  cell: number;
  minX: number;
  minY: number;
  dim: number;
  starts: Int32Array;
  order: Int32Array;
}

function buildGrid(x: Float64Array, y: Float64Array): Grid {
  const n = x.length;
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (let i = 0; i < n; i++) {
    if (x[i] < minX) minX = x[i];
    if (x[i] > maxX) maxX = x[i];
    if (y[i] < minY) minY = y[i];
    if (y[i] > maxY) maxY = y[i];
  }
  const span = Math.max(maxX - minX, maxY - minY, 1e-12);
  // aim for a few points per cell
  const dim = Math.max(1, Math.min(512, Math.floor(Math.sqrt(n / 2)) || 1));
  const cell = span / dim * 1.0000001;
  const counts = new Int32Array(dim * dim + 1);
  const cellOf = (i: number) => {
    const gx = Math.min(dim - 1, Math.floor((x[i] - minX) / cell));
    const gy = Math.min(dim - 1, Math.floor((y[i] - minY) / cell));
    return gy * dim + gx;
  };
  for (let i = 0; i < n; i++) counts[cellOf(i) + 1]++;
  for (let c = 0; c < dim * dim; c++) counts[c + 1] += counts[c];
  const starts = counts;
  const order = new Int32Array(n);
  const cursor = starts.slice(0, dim * dim);
  for (let i = 0; i < n; i++) {
    order[cursor[cellOf(i)]++] = i;
  }
  return { cell, minX, minY, dim, starts, order };
}

/**
 * Exact k nearest neighbor distances (ascending) of query point qi,
 * found by scanning grid rings until the ring floor passes the current
 * k-th distance.
 */
function knnDistances(
  g: Grid,
  x: Float64Array,
  y: Float64Array,
  qi: number,
  k: number,
): number[] {
  const qx = x[qi];
  const qy = y[qi];
  const gx = Math.min(g.dim - 1, Math.floor((qx - g.minX) / g.cell));
  const gy = Math.min(g.dim - 1, Math.floor((qy - g.minY) / g.cell));
  const best: number[] = []; // squared distances, ascending
  const push = (d2: number) => {
    if (best.length < k) {
      best.push(d2);
      best.sort((a, b) => a - b);
    } else if (d2 < best[k - 1]) {
      best[k - 1] = d2;
      best.sort((a, b) => a - b);
    }
  };
  for (let ring = 0; ring < 2 * g.dim; ring++) {
    if (best.length === k) {
      // closest possible point in the next ring
      const floor = (ring - 1) * g.cell;
      if (floor > 0 && floor * floor > best[k - 1]) break;
    }
    const x0 = Math.max(0, gx - ring);
    const x1 = Math.min(g.dim - 1, gx + ring);
    const y0 = Math.max(0, gy - ring);
    const y1 = Math.min(g.dim - 1, gy + ring);
    for (let cy = y0; cy <= y1; cy++) {
      for (let cx = x0; cx <= x1; cx++) {
        const onRing =
          cy === gy - ring || cy === gy + ring || cx === gx - ring || cx === gx + ring;
        if (!onRing) continue;
        const c = cy * g.dim + cx;
        for (let s = g.starts[c]; s < g.starts[c + 1]; s++) {
          const j = g.order[s];
          if (j === qi) continue;
          const dx = x[j] - qx;
          const dy = y[j] - qy;
          push(dx * dx + dy * dy);
        }
      }
    }
    if (x0 === 0 && y0 === 0 && x1 === g.dim - 1 && y1 === g.dim - 1) break;
  }
  return best.map(Math.sqrt);
}

/**
 * Local densities for the selected indices (or all points when
 * `wanted` is omitted). Entries not selected stay 0.
 */
export function localDensity(
  x: Float64Array,
  y: Float64Array,
  wanted: Iterable<number> | null = null,
): Float64Array {
  const n = x.length;
  const out = new Float64Array(n);
  if (n < 2) {
    out.fill(1);
    return out;
  }
  const k = Math.min(LOCAL_DENSITY_NEIGHBORS, n - 1);
  const g = buildGrid(x, y);
  const targets = wanted === null ? Array.from({ length: n }, (_, i) => i) : wanted;
  for (const i of targets) {
    const dists = knnDistances(g, x, y, i, k);
    let sum = 0;
    for (const d of dists) sum += d;
    out[i] = 1 / (sum / k);
  }
  return out;
}

/** Density histogram shown inside the curve chart. */

export const HISTOGRAM_BINS = 50;

export interface Histogram {
  min: number;
  max: number;
  binWidth: number;
  counts: Uint32Array;
}

/**
 * Equal-width bins over the observed value range. The last bin is
 * closed so the maximum lands in bin count-1; a degenerate range puts
 * everything in bin 0.
 */
export function densityHistogram(
  values: ArrayLike<number>,
  bins = HISTOGRAM_BINS,
): Histogram {
  if (values.length === 0 || bins < 1) {
    throw new RangeError("histogram needs values and at least one bin");
  }
  let min = Infinity;
  let max = -Infinity;
  for (let i = 0; i < values.length; i++) {
    const v = values[i];
    if (v < min) min = v;
    if (v > max) max = v;
  }
  const counts = new Uint32Array(bins);
  const width = (max - min) / bins;
  if (width <= 0) {
    counts[0] = values.length;
    return { min, max, binWidth: 0, counts };
  }
  for (let i = 0; i < values.length; i++) {
    const b = Math.min(bins - 1, Math.floor((values[i] - min) / width));
    counts[b]++;
  }
  return { min, max, binWidth: width, counts };
}

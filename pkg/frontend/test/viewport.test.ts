import { describe, expect, it } from "vitest";

import {
  fitBBox,
  pan,
  screenToWorld,
  worldToScreen,
  zoomAt,
} from "../src/viewport.js";

describe("transforms", () => {
  const vp = { zoom: 3, ox: 40, oy: 500 };

  it("round-trips world to screen and back", () => {
    for (const [wx, wy] of [
      [0, 0],
      [12.5, -7.25],
      [-100, 340],
    ]) {
      const [sx, sy] = worldToScreen(vp, wx, wy);
      const [bx, by] = screenToWorld(vp, sx, sy);
      expect(bx).toBeCloseTo(wx, 10);
      expect(by).toBeCloseTo(wy, 10);
    }
  });

  it("flips y so larger world y is higher on screen", () => {
    const [, syLow] = worldToScreen(vp, 0, 0);
    const [, syHigh] = worldToScreen(vp, 0, 10);
    expect(syHigh).toBeLessThan(syLow);
  });
});

describe("zoomAt", () => {
  it("keeps the world point under the cursor fixed", () => {
    const vp = { zoom: 2, ox: -30, oy: 700 };
    const anchor: [number, number] = [211, 143];
    const before = screenToWorld(vp, anchor[0], anchor[1]);
    const zoomed = zoomAt(vp, anchor[0], anchor[1], 2.7);
    const after = screenToWorld(zoomed, anchor[0], anchor[1]);
    expect(after[0]).toBeCloseTo(before[0], 9);
    expect(after[1]).toBeCloseTo(before[1], 9);
    expect(zoomed.zoom).toBeCloseTo(5.4, 12);
  });

  it("composes: zooming in then out restores the zoom level", () => {
    const vp = { zoom: 1.5, ox: 10, oy: 300 };
    const there = zoomAt(vp, 50, 60, 4);
    const back = zoomAt(there, 50, 60, 0.25);
    expect(back.zoom).toBeCloseTo(vp.zoom, 12);
    expect(back.ox).toBeCloseTo(vp.ox, 9);
    expect(back.oy).toBeCloseTo(vp.oy, 9);
  });
});

describe("pan", () => {
  it("moves screen points by the pixel delta", () => {
    const vp = { zoom: 2, ox: 0, oy: 100 };
    const moved = pan(vp, 15, -8);
    const [sx, sy] = worldToScreen(moved, 7, 7);
    const [ox, oy] = worldToScreen(vp, 7, 7);
    expect(sx - ox).toBe(15);
    expect(sy - oy).toBe(-8);
  });
});

describe("fitBBox", () => {
  it("places the whole box inside the canvas with a margin", () => {
    const box = { minX: -20, minY: 5, maxX: 140, maxY: 65 };
    const vp = fitBBox(box, 800, 600, 0.05);
    for (const [wx, wy] of [
      [box.minX, box.minY],
      [box.maxX, box.maxY],
      [box.minX, box.maxY],
      [box.maxX, box.minY],
    ]) {
      const [sx, sy] = worldToScreen(vp, wx, wy);
      expect(sx).toBeGreaterThanOrEqual(0);
      expect(sx).toBeLessThanOrEqual(800);
      expect(sy).toBeGreaterThanOrEqual(0);
      expect(sy).toBeLessThanOrEqual(600);
    }
    const [cx, cy] = worldToScreen(
      vp,
      (box.minX + box.maxX) / 2,
      (box.minY + box.maxY) / 2,
    );
    expect(cx).toBeCloseTo(400, 9);
    expect(cy).toBeCloseTo(300, 9);
  });

  it("handles a degenerate box without dividing by zero", () => {
    const vp = fitBBox({ minX: 3, minY: 4, maxX: 3, maxY: 4 }, 100, 100);
    expect(Number.isFinite(vp.zoom)).toBe(true);
    expect(vp.zoom).toBeGreaterThan(0);
  });
});

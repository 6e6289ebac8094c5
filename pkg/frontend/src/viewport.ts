/**
 * Pan/zoom state for the scatterplot canvas.
 *
 * Screen coordinates are `sx = wx * zoom + ox`, `sy = oy - wy * zoom`
 * (y flipped so the layout renders with the same orientation as the
 * CLI's SVG export). Zoom is a single scalar, so circles stay circles.
 */

export interface Viewport {
  zoom: number;
  ox: number;
  oy: number;
}

export interface BBox {
  minX: number;
  minY: number;
  maxX: number;
  maxY: number;
}

export function worldToScreen(
  vp: Viewport,
  wx: number,
  wy: number,
): [number, number] {
  return [wx * vp.zoom + vp.ox, vp.oy - wy * vp.zoom];
}

export function screenToWorld(
  vp: Viewport,
  sx: number,
  sy: number,
): [number, number] {
  return [(sx - vp.ox) / vp.zoom, (vp.oy - sy) / vp.zoom];
}

/** Zoom by `factor` keeping the world point under (sx, sy) fixed. */
export function zoomAt(
  vp: Viewport,
  sx: number,
  sy: number,
  factor: number,
): Viewport {
  const zoom = vp.zoom * factor;
  return {
    zoom,
    ox: sx - (sx - vp.ox) * factor,
    oy: sy - (sy - vp.oy) * factor,
  };
}

export function pan(vp: Viewport, dx: number, dy: number): Viewport {
  return { zoom: vp.zoom, ox: vp.ox + dx, oy: vp.oy + dy };
}

/** Viewport that fits the box into a canvas with a fractional margin. */
export function fitBBox(
  box: BBox,
  width: number,
  height: number,
  margin = 0.05,
): Viewport {
  const spanX = Math.max(box.maxX - box.minX, 1e-12);
  const spanY = Math.max(box.maxY - box.minY, 1e-12);
  const zoom = Math.min(
    (width * (1 - 2 * margin)) / spanX,
    (height * (1 - 2 * margin)) / spanY,
  );
  const cx = (box.minX + box.maxX) / 2;
  const cy = (box.minY + box.maxY) / 2;
  return {
    zoom,
    ox: width / 2 - cx * zoom,
    oy: height / 2 + cy * zoom,
  };
}

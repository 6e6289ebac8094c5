/**
 * Browser entry point. Wires the two canvases (scatterplot and curve
 * chart) to the pure modules. All state changes funnel through one
 * EventQueue drained inside a single requestAnimationFrame tick, so
 * mutations stay ordered and a burst of input costs one repaint.
 *
 * The viewer is read-only with respect to the layout: it draws what
 * layout.json says and recomputes drawn radii when the curve changes.
 * It never moves nodes.
 */

import {
  ChartLayout,
  dragControlPoint,
  hitControlPoint,
  makeChartLayout,
  paintChart,
} from "./chart.js";
import { defaultCurve, RadiusCurve } from "./curve.js";
import { densityHistogram, Histogram } from "./histogram.js";
import {
  exportCurveText,
  LayoutDoc,
  LoadError,
  parseCurveDoc,
  parseLayoutDoc,
} from "./layoutDoc.js";
import { localDensity } from "./localdensity.js";
import {
  buildFramePlan,
  buildUniqueDensities,
  drawFrame,
  nodeRadii,
  UniqueDensities,
} from "./renderer.js";
import { EventQueue } from "./queue.js";
import { fitBBox, pan, Viewport, zoomAt } from "./viewport.js";

interface ViewerState {
  doc: LayoutDoc | null;
  curve: RadiusCurve | null;
  vp: Viewport;
  hist: Histogram | null;
  uniq: UniqueDensities | null;
  /** local densities on the packed coordinates, for sparse nodes */
  local: Float64Array | null;
  sparseRange: [number, number] | null;
  radii: Float64Array | null;
  chart: ChartLayout | null;
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function main(): void {
  const plotCanvas = el<HTMLCanvasElement>("plot");
  const chartCanvas = el<HTMLCanvasElement>("chart");
  const statusLine = el<HTMLElement>("status");
  const infoLine = el<HTMLElement>("info");
  const layoutInput = el<HTMLInputElement>("layout-file");
  const curveInput = el<HTMLInputElement>("curve-file");
  const exportButton = el<HTMLButtonElement>("export-curve");
  const resetButton = el<HTMLButtonElement>("reset-view");
  const plotCtx = plotCanvas.getContext("2d")!;
  const chartCtx = chartCanvas.getContext("2d")!;

  const state: ViewerState = {
    doc: null,
    curve: null,
    vp: { zoom: 1, ox: 0, oy: plotCanvas.height },
    hist: null,
    uniq: null,
    local: null,
    sparseRange: null,
    radii: null,
    chart: null,
  };

  const queue = new EventQueue();
  let rafPending = false;
  let plotDirty = false;
  let chartDirty = false;
  let radiiDirty = false;
  let lastFrameMs = 0;

  function schedule(mutation: () => void): void {
    queue.push(mutation);
    if (!rafPending) {
      rafPending = true;
      requestAnimationFrame(tick);
    }
  }

  function tick(): void {
    rafPending = false;
    queue.flush();
    const t0 = performance.now();
    if (state.doc !== null && state.curve !== null) {
      if (radiiDirty || state.radii === null) {
        state.radii = nodeRadii(
          state.doc.nodes,
          state.uniq!,
          state.curve,
          state.local,
        );
        radiiDirty = false;
      }
      if (plotDirty) {
        const plan = buildFramePlan(
          state.doc.nodes,
          state.radii,
          state.vp,
          plotCanvas.width,
          plotCanvas.height,
        );
        plotCtx.fillStyle = "#ffffff";
        plotCtx.fillRect(0, 0, plotCanvas.width, plotCanvas.height);
        drawFrame(plotCtx, plan);
        plotDirty = false;
        lastFrameMs = performance.now() - t0;
        infoLine.textContent =
          `${state.doc.nodes.count} nodes · ${plan.count} visible · ` +
          `zoom ${state.vp.zoom.toPrecision(3)} · frame ${lastFrameMs.toFixed(1)} ms`;
      }
      if (chartDirty && state.chart !== null) {
        paintChart(chartCtx, state.chart, state.curve, state.hist);
        chartDirty = false;
      }
    }
  }

  function setStatus(msg: string, isError: boolean): void {
    statusLine.textContent = msg;
    statusLine.className = isError ? "error" : "";
  }

  function rebuildChartLayout(): void {
    if (state.curve === null) {
      state.chart = null;
      return;
    }
    state.chart = makeChartLayout(
      chartCanvas.width,
      chartCanvas.height,
      state.curve.dK,
      state.curve.rPack1,
      state.curve.sparseRange === null
        ? state.sparseRange
        : [state.curve.sparseRange[0], state.curve.sparseRange[1]],
    );
  }

  function adoptCurve(curve: RadiusCurve): void {
    // A curve file saved before any sparse nodes existed has no
    // sparse range. Attach the layout's so the chart can offer the
    // sparse axis; evaluation is unchanged by this (the range only
    // constrains where the split point may sit).
    if (curve.sparseRange === null && state.sparseRange !== null) {
      curve = new RadiusCurve(
        curve.hd,
        curve.ld,
        curve.dK,
        curve.rPack1,
        curve.mode,
        state.sparseRange,
        curve.epsilon,
      );
    }
    state.curve = curve;
    rebuildChartLayout();
    radiiDirty = true;
    plotDirty = true;
    chartDirty = true;
  }

  function loadLayoutText(text: string, name: string): void {
    let doc: LayoutDoc;
    try {
      doc = parseLayoutDoc(text);
    } catch (err) {
      if (err instanceof LoadError) {
        setStatus(`${name}: ${err.message}`, true);
        return;
      }
      throw err;
    }
    state.doc = doc;
    state.uniq = buildUniqueDensities(doc.nodes.density);
    state.hist = doc.nodes.count > 0 ? densityHistogram(doc.nodes.density) : null;
    state.local = doc.nodes.count > 0 ? localDensity(doc.nodes.x, doc.nodes.y) : null;
    let lo = Infinity;
    let hi = -Infinity;
    for (let i = 0; i < doc.nodes.count; i++) {
      if (doc.nodes.density[i] < doc.dK && state.local !== null) {
        lo = Math.min(lo, state.local[i]);
        hi = Math.max(hi, state.local[i]);
      }
    }
    state.sparseRange = lo <= hi ? [lo, hi] : null;
    state.vp = fitBBox(
      {
        minX: doc.bbox[0],
        minY: doc.bbox[1],
        maxX: doc.bbox[2],
        maxY: doc.bbox[3],
      },
      plotCanvas.width,
      plotCanvas.height,
    );
    adoptCurve(defaultCurve(doc.dK, doc.rPack1, state.sparseRange));
    setStatus(`loaded ${name} (${doc.nodes.count} nodes)`, false);
  }

  function loadCurveText(text: string, name: string): void {
    try {
      adoptCurve(parseCurveDoc(text));
    } catch (err) {
      if (err instanceof LoadError) {
        setStatus(`${name}: ${err.message}`, true);
        return;
      }
      throw err;
    }
    setStatus(`loaded curve ${name}`, false);
  }

  layoutInput.addEventListener("change", () => {
    const file = layoutInput.files?.[0];
    if (file === undefined) {
      return;
    }
    file.text().then((text) => schedule(() => loadLayoutText(text, file.name)));
  });

  curveInput.addEventListener("change", () => {
    const file = curveInput.files?.[0];
    if (file === undefined) {
      return;
    }
    file.text().then((text) => schedule(() => loadCurveText(text, file.name)));
  });

  exportButton.addEventListener("click", () => {
    if (state.curve === null) {
      setStatus("no curve to export", true);
      return;
    }
    const blob = new Blob([exportCurveText(state.curve)], {
      type: "application/json",
    });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = "curve.json";
    a.click();
    URL.revokeObjectURL(url);
    setStatus("curve exported (pass it to the CLI with --curve)", false);
  });

  resetButton.addEventListener("click", () =>
    schedule(() => {
      if (state.doc !== null) {
        state.vp = fitBBox(
          {
            minX: state.doc.bbox[0],
            minY: state.doc.bbox[1],
            maxX: state.doc.bbox[2],
            maxY: state.doc.bbox[3],
          },
          plotCanvas.width,
          plotCanvas.height,
        );
        plotDirty = true;
      }
    }),
  );

  plotCanvas.addEventListener("wheel", (e) => {
    e.preventDefault();
    const factor = Math.exp(-e.deltaY * 0.0015);
    const sx = e.offsetX;
    const sy = e.offsetY;
    schedule(() => {
      state.vp = zoomAt(state.vp, sx, sy, factor);
      plotDirty = true;
    });
  });

  let panning = false;
  let lastX = 0;
  let lastY = 0;
  plotCanvas.addEventListener("mousedown", (e) => {
    panning = true;
    lastX = e.offsetX;
    lastY = e.offsetY;
  });
  window.addEventListener("mouseup", () => {
    panning = false;
    draggingPoint = null;
  });
  plotCanvas.addEventListener("mousemove", (e) => {
    if (!panning) {
      return;
    }
    const dx = e.offsetX - lastX;
    const dy = e.offsetY - lastY;
    lastX = e.offsetX;
    lastY = e.offsetY;
    schedule(() => {
      state.vp = pan(state.vp, dx, dy);
      plotDirty = true;
    });
  });

  let draggingPoint: "hd" | "ld" | null = null;
  chartCanvas.addEventListener("mousedown", (e) => {
    if (state.chart === null || state.curve === null) {
      return;
    }
    draggingPoint = hitControlPoint(state.chart, state.curve, e.offsetX, e.offsetY);
  });
  chartCanvas.addEventListener("mousemove", (e) => {
    if (state.chart === null || state.curve === null) {
      chartCanvas.style.cursor = "default";
      return;
    }
    if (draggingPoint === null) {
      const hit = hitControlPoint(state.chart, state.curve, e.offsetX, e.offsetY);
      chartCanvas.style.cursor = hit === null ? "default" : "grab";
      return;
    }
    const which = draggingPoint;
    const px = e.offsetX;
    const py = e.offsetY;
    schedule(() => {
      if (state.chart === null || state.curve === null) {
        return;
      }
      state.curve = dragControlPoint(state.chart, state.curve, which, px, py);
      radiiDirty = true;
      plotDirty = true;
      chartDirty = true;
    });
  });

  const params = new URLSearchParams(window.location.search);
  const layoutUrl = params.get("layout");
  const curveUrl = params.get("curve");
  if (layoutUrl !== null) {
    fetch(layoutUrl)
      .then((resp) => {
        if (!resp.ok) {
          throw new LoadError(`HTTP ${resp.status}`);
        }
        return resp.text();
      })
      .then((text) => {
        schedule(() => {
          loadLayoutText(text, layoutUrl);
          if (curveUrl !== null) {
            fetch(curveUrl)
              .then((r) => (r.ok ? r.text() : Promise.reject(new LoadError(`HTTP ${r.status}`))))
              .then((t) => schedule(() => loadCurveText(t, curveUrl)))
              .catch((err) => setStatus(`${curveUrl}: ${err.message}`, true));
          }
        });
      })
      .catch((err) => setStatus(`${layoutUrl}: ${err.message}`, true));
  } else {
    setStatus("open a layout.json to begin", false);
  }
}

main();

"""File formats: CSV point ingestion, layout JSON, SVG export.

The layout JSON keeps geometry in packed coordinates and stores the
canvas size separately, so any consumer can re-derive pixel positions
at its own resolution.  All floats are written with 17 significant
digits, which round-trips IEEE doubles exactly; serialization is fully
deterministic so identical runs produce byte-identical files.
"""

import csv
import json
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import DataPoint, Layout, LayoutParams, Node, ParameterError

DEFAULT_CANVAS = (800, 800)

# Categorical fill colors, assigned to sorted category names.
PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)
DEFAULT_FILL = "#4e79a7"


def fmt_float(v: float) -> str:
    """17-significant-digit decimal form of a float."""
    f = float(v)
    if not math.isfinite(f):
        raise ParameterError("cannot serialize a non-finite number")
    return format(f, ".17g")


# ===== CSV ingestion =====


def read_points_csv(path: str) -> Tuple[List[DataPoint], int]:
    """Parse a CSV of points into DataPoints.

    The header must name x and y columns (case-insensitive); a column
    named category is carried through when present.  Rows whose
    coordinates parse but are not finite are dropped and counted (the
    second return value); rows that do not parse abort with the line
    number.  Duplicate coordinates are kept as-is.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParameterError(f"{path}: empty file")
        cols = {name.strip().lower(): i for i, name in enumerate(header)}
        if "x" not in cols or "y" not in cols:
            raise ParameterError(f"{path}: header must contain x and y columns")
        xi, yi = cols["x"], cols["y"]
        ci = cols.get("category")
        width = len(header)

        points: List[DataPoint] = []
        dropped = 0
        for line_no, row in enumerate(reader, start=2):
            if len(row) == 0:
                continue
            if len(row) != width:
                raise ParameterError(
                    f"{path}: line {line_no}: expected {width} fields, got {len(row)}"
                )
            try:
                x = float(row[xi])
                y = float(row[yi])
            except ValueError:
                raise ParameterError(
                    f"{path}: line {line_no}: malformed coordinate"
                ) from None
            if not (math.isfinite(x) and math.isfinite(y)):
                dropped += 1
                continue
            cat = row[ci].strip() if ci is not None else None
            points.append(
                DataPoint(x, y, index=len(points), category=cat or None)
            )
    return points, dropped


# ===== deterministic JSON =====


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(item) for item in v) + "]"
    if isinstance(v, dict):
        return (
            "{"
            + ",".join(
                f"{json.dumps(str(key))}:{_json_value(val)}"
                for key, val in v.items()
            )
            + "}"
        )
    raise ParameterError(f"cannot serialize {type(v).__name__}")


def dumps_layout_doc(doc: Dict) -> str:
    """Serialize a layout document with one node per line.

    Key order is taken from the dict, so re-serializing a parsed
    document reproduces it byte for byte.
    """
    parts = []
    for key, val in doc.items():
        if key == "nodes":
            rows = ",\n    ".join(_json_value(nd) for nd in val)
            parts.append(f'"nodes": [\n    {rows}\n  ]')
        else:
            parts.append(f"{json.dumps(str(key))}: {_json_value(val)}")
    return "{\n  " + ",\n  ".join(parts) + "\n}\n"


def layout_to_doc(
    layout: Layout, canvas: Tuple[int, int] = DEFAULT_CANVAS
) -> Dict:
    p = layout.params
    doc: Dict = {
        "params": {
            "size": p.size,
            "k": p.k,
            "th": p.th,
            "seed": p.seed,
            "epsilon": p.epsilon,
        },
        "bbox": list(layout.bbox),
        "d_k": layout.d_k,
        "r_pack1": layout.r_pack1,
        "num_max": layout.num_max,
        "canvas": {"width": int(canvas[0]), "height": int(canvas[1])},
    }
    nodes = []
    for nd in layout.nodes:
        row: Dict = {
            "id": nd.source_index,
            "x": nd.x,
            "y": nd.y,
            "r_pack": nd.r_pack,
            "r_draw": nd.r_draw,
            "density": nd.density,
        }
        if nd.category is not None:
            row["category"] = nd.category
        nodes.append(row)
    doc["nodes"] = nodes
    return doc


def write_layout_json(
    path: str, layout: Layout, canvas: Tuple[int, int] = DEFAULT_CANVAS
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_layout_doc(layout_to_doc(layout, canvas)))


def load_layout_doc(path: str) -> Dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def layout_from_doc(doc: Dict) -> Layout:
    """Rebuild a Layout from a parsed layout document.

    Polar placement targets are not serialized, so dis and angle come
    back as zero.
    """
    p = doc.get("params", {})
    params = LayoutParams(
        size=float(p.get("size", 5.0)),
        k=int(p.get("k", 3)),
        th=None if p.get("th") is None else int(p["th"]),
        seed=int(p.get("seed", 0)),
        epsilon=float(p.get("epsilon", 1e-9)),
    )
    nodes = tuple(
        Node(
            x=float(nd["x"]),
            y=float(nd["y"]),
            r_pack=float(nd["r_pack"]),
            r_draw=float(nd["r_draw"]),
            density=float(nd["density"]),
            source_index=int(nd["id"]),
            category=nd.get("category"),
        )
        for nd in doc["nodes"]
    )
    num_max = doc.get("num_max")
    d_k = doc.get("d_k")
    r_pack1 = doc.get("r_pack1")
    return Layout(
        nodes=nodes,
        bbox=tuple(float(v) for v in doc["bbox"]),
        params=params,
        num_max=None if num_max is None else int(num_max),
        d_k=None if d_k is None else float(d_k),
        r_pack1=None if r_pack1 is None else float(r_pack1),
    )


# ===== metrics JSON =====


def write_metrics_json(path: str, report_doc: Dict) -> None:
    parts = [
        f"{json.dumps(str(key))}: {_json_value(val)}"
        for key, val in report_doc.items()
    ]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{\n  " + ",\n  ".join(parts) + "\n}\n")


# ===== SVG export =====


def _category_colors(nodes: Sequence[Node]) -> Dict[str, str]:
    cats = sorted({nd.category for nd in nodes if nd.category is not None})
    return {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(cats)}


def canvas_transform(
    layout: Layout, canvas: Tuple[int, int]
) -> Tuple[float, float, float]:
    """(scale, offset_x, offset_y) mapping packed coordinates to pixels.

    Uniform scale fits the draw extents into the canvas, centered; the
    y axis flips so data-up renders screen-up.  Pixel position of a
    node is (x*s + ox, -y*s + oy) and its pixel radius is r_draw*s.
    """
    w, h = canvas
    xs = np.array([nd.x for nd in layout.nodes])
    ys = np.array([nd.y for nd in layout.nodes])
    rs = np.array([nd.r_draw for nd in layout.nodes])
    min_x = float(np.min(xs - rs))
    max_x = float(np.max(xs + rs))
    min_y = float(np.min(ys - rs))
    max_y = float(np.max(ys + rs))
    span_x = max(max_x - min_x, 1e-300)
    span_y = max(max_y - min_y, 1e-300)
    s = min(w / span_x, h / span_y)
    ox = w / 2.0 - s * (min_x + max_x) / 2.0
    oy = h / 2.0 + s * (min_y + max_y) / 2.0
    return s, ox, oy


def write_svg(
    path: str, layout: Layout, canvas: Tuple[int, int] = DEFAULT_CANVAS
) -> None:
    """Render the layout's circles at r_draw into an SVG file."""
    w, h = canvas
    s, ox, oy = canvas_transform(layout, canvas)
    colors = _category_colors(layout.nodes)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="#ffffff"/>',
    ]
    for nd in layout.nodes:
        cx = fmt_float(nd.x * s + ox)
        cy = fmt_float(-nd.y * s + oy)
        rr = fmt_float(nd.r_draw * s)
        fill = colors.get(nd.category, DEFAULT_FILL)
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="{rr}" fill="{fill}"/>')
    lines.append("</svg>\n")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))

"""Command-line front door.

One invocation runs the full pipeline on a CSV of points and writes
layout.json, plot.svg and (optionally) metrics.json into the output
directory; --bench switches to the benchmark sweeps and writes
bench.csv instead.
"""

import argparse
import os
import sys
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from . import radius
from .bench import run_spec, write_bench_csv
from .core import GeometryError, LayoutParams, ParameterError
from .io import (
    DEFAULT_CANVAS,
    read_points_csv,
    write_layout_json,
    write_metrics_json,
    write_svg,
)
from .metrics import (
    DEFAULT_CIRCLES,
    DEFAULT_DIRECTIONS,
    DEFAULT_KNN,
    compute_all,
)
from .packing import pack
from .radius import CurveError, load_curve
from .transcribe import transcribe


@dataclass
class RunConfig:
    input: str
    out: str = "."
    size: float = 5.0
    k: int = 3
    th: Optional[int] = None
    seed: int = 0
    canvas: Tuple[int, int] = DEFAULT_CANVAS
    curve_path: Optional[str] = None
    metrics_on: bool = False
    knn_k: int = DEFAULT_KNN
    n_circles: int = DEFAULT_CIRCLES
    n_directions: int = DEFAULT_DIRECTIONS
    spread: bool = True


def run_pipeline(cfg: RunConfig) -> Dict[str, str]:
    """Execute the pipeline; returns the paths of the written files."""
    points, dropped = read_points_csv(cfg.input)
    if dropped:
        print(
            f"warning: dropped {dropped} rows with non-finite coordinates",
            file=sys.stderr,
        )
    if not points:
        raise ParameterError(f"{cfg.input}: no usable points")

    params = LayoutParams(size=cfg.size, k=cfg.k, th=cfg.th, seed=cfg.seed)
    tr = transcribe(points, params, spread=cfg.spread)
    layout = pack(tr.nodes, params=params)
    layout = replace(
        layout, num_max=tr.num_max, d_k=tr.d_k, r_pack1=tr.r_pack1
    )
    if cfg.curve_path is not None:
        layout = radius.apply(layout, load_curve(cfg.curve_path))

    os.makedirs(cfg.out, exist_ok=True)
    paths = {
        "layout": os.path.join(cfg.out, "layout.json"),
        "svg": os.path.join(cfg.out, "plot.svg"),
    }
    write_layout_json(paths["layout"], layout, cfg.canvas)
    write_svg(paths["svg"], layout, cfg.canvas)

    if cfg.metrics_on:
        s = [(p.x, p.y) for p in points]
        s_prime = [(nd.x, nd.y) for nd in layout.nodes]
        report = compute_all(
            s, s_prime, cfg.knn_k, cfg.n_circles, cfg.n_directions
        )
        paths["metrics"] = os.path.join(cfg.out, "metrics.json")
        write_metrics_json(paths["metrics"], report.to_json_dict())
    return paths


def _parse_canvas(text: str) -> Tuple[int, int]:
    try:
        w, h = text.lower().split("x", 1)
        canvas = (int(w), int(h))
    except ValueError:
        raise ParameterError(f"bad canvas spec {text!r}, expected WxH") from None
    if canvas[0] < 1 or canvas[1] < 1:
        raise ParameterError("canvas dimensions must be positive")
    return canvas


def _parse_th(text: str) -> Optional[int]:
    if text == "auto":
        return None
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="scatterpack",
        description=(
            "Re-layout an overdrawn scatterplot into overlap-free circles."
        ),
    )
    p.add_argument("--input", help="CSV with x,y (and optional category) columns")
    p.add_argument("--out", default=".", help="output directory (default .)")
    p.add_argument("--size", type=float, default=5.0, help="density-grid cell width")
    p.add_argument("--k", type=int, default=3, help="minimum nodes per occupied cell")
    p.add_argument(
        "--th",
        type=_parse_th,
        default=None,
        metavar="TH",
        help="frontier window half-width, or 'auto' (default)",
    )
    p.add_argument("--seed", type=int, default=0, help="PRNG seed")
    p.add_argument(
        "--canvas",
        type=_parse_canvas,
        default=DEFAULT_CANVAS,
        metavar="WxH",
        help="canvas size in pixels (default 800x800)",
    )
    p.add_argument("--curve", metavar="FILE", help="rendering-radius curve JSON")
    p.add_argument(
        "--metrics", action="store_true", help="also score and write metrics.json"
    )
    p.add_argument("--knn", type=int, default=DEFAULT_KNN, help="metric neighbor count")
    p.add_argument(
        "--circles", type=int, default=DEFAULT_CIRCLES, help="metric ring count"
    )
    p.add_argument(
        "--directions",
        type=int,
        default=DEFAULT_DIRECTIONS,
        help="metric projection count",
    )
    p.add_argument(
        "--bench",
        metavar="SPEC",
        help=(
            "run benchmark sweeps instead of the pipeline; SPEC like "
            "'time=10k,100k', 'k=1..20', 'size=1..10', 'sampling=10', "
            "'all', joined with ';'"
        ),
    )
    p.add_argument(
        "--no-spread",
        action="store_true",
        help="keep coincident points coincident instead of spreading them",
    )
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.bench:
            os.makedirs(args.out, exist_ok=True)
            rows = run_spec(args.bench, seed=args.seed)
            path = os.path.join(args.out, "bench.csv")
            write_bench_csv(path, rows)
            print(path)
            return 0
        if not args.input:
            print("error: --input is required (or use --bench)", file=sys.stderr)
            return 2
        cfg = RunConfig(
            input=args.input,
            out=args.out,
            size=args.size,
            k=args.k,
            th=args.th,
            seed=args.seed,
            canvas=args.canvas,
            curve_path=args.curve,
            metrics_on=args.metrics,
            knn_k=args.knn,
            n_circles=args.circles,
            n_directions=args.directions,
            spread=not args.no_spread,
        )
        for path in run_pipeline(cfg).values():
            print(path)
        return 0
    except (ParameterError, GeometryError, CurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

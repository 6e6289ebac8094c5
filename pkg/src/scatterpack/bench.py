"""Benchmark sweeps: packing time against node count, and node count
against the transcription parameters.

Rows all land in one CSV with a ``sweep`` discriminator column so a
plotting script can split them.  Timing rows measure the packing loop
alone on synthetic circle sets; parameter rows only need the size of
the transcription, which is computed without packing.
"""

import csv
import math
import time
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from .core import LayoutParams, ParameterError, TWO_PI
from .packing import pack_arrays
from .transcribe import transcription_size

BENCH_COLUMNS = ("sweep", "dataset", "param", "n_input", "n_prime", "time_ms")

DEFAULT_DATASET_SIZE = 20_000
DEFAULT_DATASETS = 5


def disk_instance(n: int, seed: int = 0):
    """n circles with radii uniform in [1, 10], centers uniform in the
    unit disk."""
    rng = np.random.default_rng(seed)
    ang = rng.uniform(0.0, TWO_PI, n)
    rad = np.sqrt(rng.uniform(0.0, 1.0, n))
    r = rng.uniform(1.0, 10.0, n)
    return rad * np.cos(ang), rad * np.sin(ang), r


def mixture_instance(n: int, seed: int = 0, clusters: int = 8, span: float = 100.0):
    """Gaussian-mixture point cloud used by the parameter sweeps."""
    rng = np.random.default_rng(seed)
    centers = rng.uniform(0.0, span, (clusters, 2))
    scales = rng.uniform(span / 40.0, span / 10.0, clusters)
    comp = rng.integers(0, clusters, n)
    x = centers[comp, 0] + rng.normal(0.0, scales[comp])
    y = centers[comp, 1] + rng.normal(0.0, scales[comp])
    return x, y


def time_rows(sizes: Sequence[int], seed: int = 0) -> List[Dict]:
    """One packing-time measurement per requested node count."""
    # Warm the jitted kernel so compilation is not on anyone's clock.
    wx, wy, wr = disk_instance(256, seed=seed)
    pack_arrays(wx, wy, wr)
    rows = []
    for n in sizes:
        x, y, r = disk_instance(int(n), seed=seed)
        t0 = time.perf_counter()
        pack_arrays(x, y, r)
        dt = time.perf_counter() - t0
        rows.append(
            {
                "sweep": "time",
                "dataset": 0,
                "param": int(n),
                "n_input": int(n),
                "n_prime": int(n),
                "time_ms": dt * 1e3,
            }
        )
    return rows


def _param_rows(
    sweep: str,
    values: Iterable,
    n: int,
    datasets: int,
    seed: int,
    make_params,
    subsample: bool = False,
) -> List[Dict]:
    rows = []
    for ds in range(datasets):
        x, y = mixture_instance(n, seed=seed + ds)
        for v in values:
            if subsample:
                rng = np.random.default_rng((seed + ds, int(round(v * 1e9))))
                m = max(1, int(math.floor(v * n)))
                idx = rng.choice(n, size=m, replace=False)
                xs, ys = x[idx], y[idx]
                params = make_params(None)
            else:
                xs, ys = x, y
                params = make_params(v)
            rows.append(
                {
                    "sweep": sweep,
                    "dataset": ds,
                    "param": v,
                    "n_input": len(xs),
                    "n_prime": transcription_size(xs, ys, params),
                    "time_ms": None,
                }
            )
    return rows


def k_rows(
    ks: Sequence[int],
    n: int = DEFAULT_DATASET_SIZE,
    datasets: int = DEFAULT_DATASETS,
    seed: int = 0,
) -> List[Dict]:
    return _param_rows(
        "k", ks, n, datasets, seed, lambda k: LayoutParams(k=int(k))
    )


def size_rows(
    sizes: Sequence[float],
    n: int = DEFAULT_DATASET_SIZE,
    datasets: int = DEFAULT_DATASETS,
    seed: int = 0,
) -> List[Dict]:
    return _param_rows(
        "size", sizes, n, datasets, seed, lambda s: LayoutParams(size=float(s))
    )


def sampling_rows(
    steps: int,
    n: int = DEFAULT_DATASET_SIZE,
    datasets: int = DEFAULT_DATASETS,
    seed: int = 0,
) -> List[Dict]:
    fracs = [i / steps for i in range(1, steps + 1)]
    return _param_rows(
        "sampling",
        fracs,
        n,
        datasets,
        seed,
        lambda _: LayoutParams(),
        subsample=True,
    )


# ===== spec parsing and CSV output =====


def _parse_count(tok: str) -> int:
    tok = tok.strip().lower()
    mult = 1
    if tok.endswith("k"):
        mult, tok = 1_000, tok[:-1]
    elif tok.endswith("m"):
        mult, tok = 1_000_000, tok[:-1]
    return int(float(tok) * mult)


def _parse_range(tok: str) -> List[int]:
    lo, hi = tok.split("..", 1)
    return list(range(int(lo), int(hi) + 1))


def run_spec(spec: str, seed: int = 0) -> List[Dict]:
    """Execute a sweep described by a compact spec string.

    Directives (separated by semicolons):
      time=N[,N...]   pack timing at the given node counts (k/m suffixes ok)
      k=LO..HI        transcription size against the k parameter
      size=LO..HI     transcription size against the cell size
      sampling=STEPS  transcription size against the subsample fraction
      all             a default battery of the four sweeps
    """
    rows: List[Dict] = []
    for directive in spec.split(";"):
        directive = directive.strip()
        if not directive:
            continue
        if directive == "all":
            rows += time_rows([10_000, 20_000, 40_000, 80_000], seed=seed)
            rows += k_rows(range(1, 21), seed=seed)
            rows += size_rows(range(1, 11), seed=seed)
            rows += sampling_rows(10, seed=seed)
            continue
        if "=" not in directive:
            raise ParameterError(f"bad bench directive: {directive!r}")
        name, arg = directive.split("=", 1)
        name = name.strip()
        if name == "time":
            rows += time_rows([_parse_count(t) for t in arg.split(",")], seed=seed)
        elif name == "k":
            rows += k_rows(_parse_range(arg), seed=seed)
        elif name == "size":
            rows += size_rows(_parse_range(arg), seed=seed)
        elif name == "sampling":
            rows += sampling_rows(int(arg), seed=seed)
        else:
            raise ParameterError(f"unknown bench sweep: {name!r}")
    if not rows:
        raise ParameterError("empty bench spec")
    return rows


def write_bench_csv(path: str, rows: Sequence[Dict]) -> None:
    from .io import fmt_float

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_COLUMNS)
        for row in rows:
            out = []
            for col in BENCH_COLUMNS:
                v = row[col]
                if v is None:
                    out.append("")
                elif isinstance(v, float):
                    out.append(fmt_float(v))
                else:
                    out.append(str(v))
            writer.writerow(out)

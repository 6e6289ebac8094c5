"""Transcription of a 2D point set into a density-faithful circle set.

The input plane is cut into square cells of width ``size``.  Every cell
that holds points contributes one circle per point, all with the same
packing radius, chosen so the cell's total circle area equals the cell
area: r = sqrt(size^2 / (pi * max(k, num))).  Cells holding fewer than
``k`` points are topped up with dummy circles at uniform random
positions inside the cell, so sparse regions keep their footprint when
the circles are later packed.

Coincident points (exact duplicate coordinates) carry no spatial
information and would all land in one cell; they are optionally spread
onto a small sunflower spiral first so their multiplicity survives as a
local blob instead of a single stack.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import DataPoint, LayoutParams, Node, ParameterError

# Sunflower-spiral constant: successive points advance by this angle.
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

# Spiral spacing, as a fraction of the cell width, used when no explicit
# spacing is given.
DEFAULT_SPREAD_FRACTION = 1.0 / 20.0

_MASK64 = (1 << 64) - 1


# ===== deterministic RNG =====
#
# Dummy placement must be reproducible bit-for-bit across runs and
# platforms, and independent of the order cells are visited in, so each
# cell draws from its own splitmix64 stream keyed by (seed, i, j).


def _splitmix64(state: int) -> Tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z = z ^ (z >> 31)
    return state, z


class _CellStream:
    """One splitmix64 stream per grid cell."""

    def __init__(self, seed: int, i: int, j: int):
        key = ((i & 0xFFFFFFFF) << 32) | (j & 0xFFFFFFFF)
        _, scrambled = _splitmix64(key)
        self._state = (seed ^ scrambled) & _MASK64

    def uniform(self, low: float, high: float) -> float:
        self._state, z = _splitmix64(self._state)
        u = (z >> 11) * (1.0 / (1 << 53))
        return low + (high - low) * u


# ===== types =====


@dataclass(frozen=True)
class Grid:
    """One occupied cell of the density grid."""

    i: int  # row, from y
    j: int  # column, from x
    points: Tuple[DataPoint, ...]

    def __post_init__(self):
        if len(self.points) == 0:
            raise ParameterError("a grid cell must hold at least one point")


@dataclass(frozen=True)
class TranscriptionResult:
    """Circle set produced from a point set, plus its density context.

    num_max is the largest per-cell point count; d_k = min(1, k/num_max)
    is the density below which a cell was padded with dummies; r_pack1
    is the packing radius of the densest cell, and also every node's
    default draw radius.
    """

    nodes: Tuple[Node, ...]
    num_max: int
    d_k: float
    r_pack1: float

    @property
    def n_prime(self) -> int:
        return len(self.nodes)


# ===== operations =====


def spread_singularities(
    points: Sequence[DataPoint], spacing: float
) -> List[DataPoint]:
    """Replace every group of coincident points with a sunflower spiral.

    The m-th point of a group (1-based, in input order) moves to
    radius spacing*sqrt(m) at angle m*GOLDEN_ANGLE around the shared
    coordinate.  Groups of one are left untouched.  Output order and
    indices match the input.
    """
    if spacing <= 0.0:
        raise ParameterError("spacing must be positive")
    n = len(points)
    if n == 0:
        return []
    x = np.fromiter((p.x for p in points), dtype=np.float64, count=n)
    y = np.fromiter((p.y for p in points), dtype=np.float64, count=n)
    sx, sy = _spread_arrays(x, y, spacing)
    out: List[DataPoint] = []
    for idx, p in enumerate(points):
        if sx[idx] == p.x and sy[idx] == p.y:
            out.append(p)
        else:
            out.append(
                DataPoint(float(sx[idx]), float(sy[idx]), p.index, p.category)
            )
    return out


def _spread_arrays(
    x: np.ndarray, y: np.ndarray, spacing: float
) -> Tuple[np.ndarray, np.ndarray]:
    n = len(x)
    order = np.lexsort((np.arange(n), y, x))
    xs = x[order]
    ys = y[order]
    new_group = np.r_[True, (xs[1:] != xs[:-1]) | (ys[1:] != ys[:-1])]
    starts = np.flatnonzero(new_group)
    sizes = np.diff(np.r_[starts, n])
    # 1-based rank of each point inside its coincident group, following
    # the original input order.
    rank = np.arange(n) - np.repeat(starts, sizes) + 1
    multi = np.repeat(sizes >= 2, sizes)
    radius = spacing * np.sqrt(rank)
    theta = rank * GOLDEN_ANGLE
    out_x = xs.copy()
    out_y = ys.copy()
    out_x[multi] += (radius * np.cos(theta))[multi]
    out_y[multi] += (radius * np.sin(theta))[multi]
    res_x = np.empty(n)
    res_y = np.empty(n)
    res_x[order] = out_x
    res_y[order] = out_y
    return res_x, res_y


def gridding(points: Sequence[DataPoint], size: float) -> List[Grid]:
    """Bin points into square cells of width ``size``.

    The cell origin sits at the minimum coordinate of the point set;
    point p lands in column j = floor((p.x - min_x)/size) and row
    i = floor((p.y - min_y)/size).  Only occupied cells are returned,
    in row-major (i, then j) order.
    """
    if size <= 0.0:
        raise ParameterError("size must be positive")
    if len(points) == 0:
        raise ParameterError("empty point set")
    ox = min(p.x for p in points)
    oy = min(p.y for p in points)
    cells = {}
    for p in points:
        j = int(math.floor((p.x - ox) / size))
        i = int(math.floor((p.y - oy) / size))
        cells.setdefault((i, j), []).append(p)
    return [
        Grid(i, j, tuple(cells[(i, j)])) for (i, j) in sorted(cells.keys())
    ]


def transcribe(
    points: Sequence[DataPoint],
    params: Optional[LayoutParams] = None,
    spread: bool = True,
    spacing: Optional[float] = None,
) -> TranscriptionResult:
    """Turn points into a circle set that preserves the density field.

    Every input point becomes one data node at its own coordinates;
    cells below the ``k`` threshold gain dummy nodes at seeded uniform
    positions inside the cell.  All nodes of a cell share the cell's
    packing radius, and every node's default draw radius is the global
    minimum packing radius (the radius of the densest cell), so default
    rendering can never reintroduce overlap among packed circles.
    """
    params = params or LayoutParams()
    if len(points) == 0:
        raise ParameterError("empty point set")
    size, k = params.size, params.k

    pts: Sequence[DataPoint] = points
    if spread:
        pts = spread_singularities(
            points, spacing if spacing is not None else size * DEFAULT_SPREAD_FRACTION
        )
    elif spacing is not None:
        raise ParameterError("spacing given but spreading disabled")

    grids = gridding(pts, size)
    ox = min(p.x for p in pts)
    oy = min(p.y for p in pts)

    num_max = max(len(g.points) for g in grids)
    d_k = min(1.0, k / num_max)
    r_pack1 = math.sqrt(size * size / (math.pi * max(k, num_max)))

    nodes: List[Node] = []
    for g in grids:
        num = len(g.points)
        r = math.sqrt(size * size / (math.pi * max(k, num)))
        density = num / num_max
        for p in g.points:
            nodes.append(
                Node(
                    x=p.x,
                    y=p.y,
                    r_pack=r,
                    r_draw=r_pack1,
                    density=density,
                    source_index=p.index,
                    category=p.category,
                )
            )
        if num < k:
            stream = _CellStream(params.seed, g.i, g.j)
            for _ in range(k - num):
                dx = stream.uniform(0.0, size)
                dy = stream.uniform(0.0, size)
                nodes.append(
                    Node(
                        x=ox + g.j * size + dx,
                        y=oy + g.i * size + dy,
                        r_pack=r,
                        r_draw=r_pack1,
                        density=density,
                        is_dummy=True,
                    )
                )
    return TranscriptionResult(tuple(nodes), num_max, d_k, r_pack1)


def transcription_size(
    x: np.ndarray,
    y: np.ndarray,
    params: Optional[LayoutParams] = None,
    spread: bool = True,
    spacing: Optional[float] = None,
) -> int:
    """Node count the transcription would produce, without building it.

    Array-level twin of transcribe() used by parameter sweeps, where
    only sum(max(k, num)) over occupied cells is needed.
    """
    params = params or LayoutParams()
    if len(x) == 0:
        raise ParameterError("empty point set")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if spread:
        x, y = _spread_arrays(
            x, y, spacing if spacing is not None else params.size * DEFAULT_SPREAD_FRACTION
        )
    size = params.size
    jj = np.floor((x - x.min()) / size).astype(np.int64)
    ii = np.floor((y - y.min()) / size).astype(np.int64)
    key = (ii << 32) ^ (jj & 0xFFFFFFFF)
    _, counts = np.unique(key, return_counts=True)
    return int(np.maximum(params.k, counts).sum())

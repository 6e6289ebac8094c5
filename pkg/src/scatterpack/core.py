"""Shared data model for overlap-free scatterplot layouts.

A layout run turns raw 2D points into circles ("nodes") that carry two
radii: ``r_pack`` is the radius the packing stage guarantees to be
overlap-free, ``r_draw`` is the radius actually rendered.  Everything
downstream (packing, radius configuration, metrics, serialization)
speaks in terms of the types defined here.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

TWO_PI = 2.0 * math.pi

# Relative tolerance used when constructing tangent geometry.
EPS_CONSTRUCT = 1e-9
# Relative tolerance used when accepting a layout as overlap-free.
EPS_ACCEPT = 1e-6

# Above this node count the overlap checker switches from the all-pairs
# route to a uniform-grid broadphase.
_BRUTE_FORCE_LIMIT = 5000


class ParameterError(ValueError):
    """A configuration value is out of its documented range."""


class GeometryError(ValueError):
    """A geometric construction has no solution for the given input."""


# ===== value types =====


@dataclass(frozen=True)
class DataPoint:
    """One raw input point, identified by its position in the input sequence."""

    x: float
    y: float
    index: int
    category: Optional[str] = None

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ParameterError("data point coordinates must be finite")
        if self.index < 0:
            raise ParameterError("data point index must be >= 0")


@dataclass(frozen=True)
class Node:
    """A circle in the layout.

    ``dis`` and ``angle`` are the node's polar coordinates about the
    packing center, computed from the node's pre-packing position; they
    are kept on the node so the packed result can be audited against the
    placement targets.  ``density`` is the normalized occupancy of the
    density-grid cell the node came from.
    """

    x: float
    y: float
    r_pack: float
    r_draw: float
    density: float
    is_dummy: bool = False
    source_index: Optional[int] = None
    dis: float = 0.0
    angle: float = 0.0
    category: Optional[str] = None

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ParameterError("node coordinates must be finite")
        if not (self.r_pack > 0.0 and math.isfinite(self.r_pack)):
            raise ParameterError("r_pack must be positive")
        if not (self.r_draw > 0.0 and math.isfinite(self.r_draw)):
            raise ParameterError("r_draw must be positive")
        if not (0.0 <= self.density <= 1.0):
            raise ParameterError("density must lie in [0, 1]")
        if self.is_dummy and self.source_index is not None:
            raise ParameterError("dummy nodes carry no source index")
        if not self.is_dummy and self.source_index is None:
            raise ParameterError("data nodes must carry a source index")
        if self.dis < 0.0:
            raise ParameterError("dis must be >= 0")
        if not (0.0 <= self.angle < TWO_PI):
            raise ParameterError("angle must lie in [0, 2*pi)")


@dataclass(frozen=True)
class LayoutParams:
    """Knobs for the transcription and packing stages.

    ``th`` is the half-width of the frontier window scanned for a
    placement; ``None`` lets the packer pick a width from the node
    count.  ``epsilon`` is the relative tolerance for tangency
    construction (acceptance checks use the looser EPS_ACCEPT).
    """

    size: float = 5.0
    k: int = 3
    th: Optional[int] = None
    seed: int = 0
    epsilon: float = EPS_CONSTRUCT

    def __post_init__(self):
        if not (self.size > 0.0 and math.isfinite(self.size)):
            raise ParameterError("size must be positive")
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.th is not None and self.th < 1:
            raise ParameterError("th must be >= 1")
        if not (0 <= self.seed < 2**64):
            raise ParameterError("seed must fit in 64 bits")
        if not (0.0 < self.epsilon <= 1e-3):
            raise ParameterError("epsilon must lie in (0, 1e-3]")


@dataclass(frozen=True)
class Layout:
    """A packed, overlap-free arrangement of nodes.

    ``bbox`` covers every node center inflated by its r_pack.  ``num_max``
    and ``d_k`` are carried over from transcription so the radius
    configuration stage can locate the packing-radius curve; they are
    None for layouts assembled from bare nodes.
    """

    nodes: Tuple[Node, ...]
    bbox: Tuple[float, float, float, float]
    params: LayoutParams = field(default_factory=LayoutParams)
    num_max: Optional[int] = None
    d_k: Optional[float] = None
    r_pack1: Optional[float] = None

    def __post_init__(self):
        if len(self.nodes) == 0:
            raise ParameterError("a layout must contain at least one node")

    # --- array views ---

    def positions(self) -> np.ndarray:
        return np.array([(n.x, n.y) for n in self.nodes], dtype=np.float64)

    def pack_radii(self) -> np.ndarray:
        return np.array([n.r_pack for n in self.nodes], dtype=np.float64)

    def draw_radii(self) -> np.ndarray:
        return np.array([n.r_draw for n in self.nodes], dtype=np.float64)

    def densities(self) -> np.ndarray:
        return np.array([n.density for n in self.nodes], dtype=np.float64)

    @staticmethod
    def bbox_of(nodes: Sequence[Node]) -> Tuple[float, float, float, float]:
        xs = np.array([n.x for n in nodes])
        ys = np.array([n.y for n in nodes])
        rs = np.array([n.r_pack for n in nodes])
        return (
            float(np.min(xs - rs)),
            float(np.min(ys - rs)),
            float(np.max(xs + rs)),
            float(np.max(ys + rs)),
        )


# ===== operations =====


def center_of(nodes: Sequence[Node]) -> Tuple[float, float]:
    """Centroid of the node centers."""
    if len(nodes) == 0:
        raise ParameterError("empty node set")
    xs = np.fromiter((n.x for n in nodes), dtype=np.float64, count=len(nodes))
    ys = np.fromiter((n.y for n in nodes), dtype=np.float64, count=len(nodes))
    return float(xs.mean()), float(ys.mean())


def check_mutual_exclusion(
    layout: Layout,
    radius_field: str = "pack",
    epsilon: float = EPS_ACCEPT,
) -> List[Tuple[int, int]]:
    """All node pairs (i, j), i < j, overlapping beyond the tolerance.

    A pair violates mutual exclusion when the center distance drops
    below (r_i + r_j) * (1 - epsilon).  Small instances go through an
    all-pairs check; larger ones through a uniform-grid broadphase that
    finds the same set.
    """
    if radius_field == "pack":
        r = layout.pack_radii()
    elif radius_field == "draw":
        r = layout.draw_radii()
    else:
        raise ParameterError("radius_field must be 'pack' or 'draw'")
    pos = layout.positions()
    return overlap_pairs(pos[:, 0], pos[:, 1], r, epsilon)


def overlap_pairs(
    x: np.ndarray, y: np.ndarray, r: np.ndarray, epsilon: float = EPS_ACCEPT
) -> List[Tuple[int, int]]:
    """Array-level overlap detection; see check_mutual_exclusion."""
    n = len(x)
    if n < 2:
        return []
    if n <= _BRUTE_FORCE_LIMIT:
        return _overlap_pairs_bruteforce(x, y, r, epsilon)
    return _overlap_pairs_grid(x, y, r, epsilon)


def _overlap_pairs_bruteforce(x, y, r, epsilon):
    n = len(x)
    out: List[Tuple[int, int]] = []
    chunk = 512
    for a in range(0, n, chunk):
        b = min(a + chunk, n)
        dx = x[a:b, None] - x[None, :]
        dy = y[a:b, None] - y[None, :]
        lim = (r[a:b, None] + r[None, :]) * (1.0 - epsilon)
        hit = dx * dx + dy * dy < lim * lim
        ii, jj = np.nonzero(hit)
        for i, j in zip(ii, jj):
            gi = a + int(i)
            if gi < j:
                out.append((gi, int(j)))
    return out


def _overlap_pairs_grid(x, y, r, epsilon):
    # Cell width 2*rmax: any overlapping pair sits in the same or an
    # adjacent cell, so a 3x3 neighborhood sweep is complete.
    rmax = float(np.max(r))
    cell = 2.0 * rmax
    cx = np.floor(x / cell).astype(np.int64)
    cy = np.floor(y / cell).astype(np.int64)
    groups = {}
    for idx in range(len(x)):
        groups.setdefault((int(cx[idx]), int(cy[idx])), []).append(idx)
    groups = {key: np.asarray(v, dtype=np.int64) for key, v in groups.items()}

    out: List[Tuple[int, int]] = []
    for (gx, gy), ia in groups.items():
        for dx_c in (-1, 0, 1):
            for dy_c in (-1, 0, 1):
                nb = (gx + dx_c, gy + dy_c)
                if nb < (gx, gy):
                    continue  # each unordered cell pair visited once
                ib = groups.get(nb)
                if ib is None:
                    continue
                dx = x[ia][:, None] - x[ib][None, :]
                dy = y[ia][:, None] - y[ib][None, :]
                lim = (r[ia][:, None] + r[ib][None, :]) * (1.0 - epsilon)
                hit = dx * dx + dy * dy < lim * lim
                ii, jj = np.nonzero(hit)
                for i, j in zip(ii, jj):
                    a, b = int(ia[i]), int(ib[j])
                    if a < b:
                        out.append((a, b))
                    elif b < a and nb != (gx, gy):
                        out.append((b, a))
    out.sort()
    return out

"""Rendering-radius configuration.

Packing radii guarantee mutual exclusion; rendering radii decide what
the eye gets.  This module implements the density/radius configuration
model: the packing-radius curve r_pack(d) is the safe ceiling for
rendering radii wherever a cell density is defined (d >= d_k), the
global minimum r_pack1 is the floor everywhere, and a two-control-point
curve (one high-density point riding the ceiling, one low-density point
placed freely in the feasible region) maps every node density to a
rendering radius.

Nodes below the d_k boundary live on a separate density axis: their
local density is the reciprocal of the mean distance to their nearest
neighbors in the packed layout.
"""

import json
import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from .core import Layout, Node, ParameterError

LD_LEFT = "ld_left"  # low-density point on the sparse axis (d < d_k)
LD_RIGHT = "ld_right"  # low-density point on the cell-density axis

_REL_TOL = 1e-12

# Neighbors used for the local density of sparse nodes.
LOCAL_DENSITY_NEIGHBORS = 5


class CurveError(ValueError):
    """Rejected rendering-radius curve configuration."""


def _finite(*vals: float) -> bool:
    return all(math.isfinite(v) for v in vals)


@dataclass(frozen=True)
class RadiusCurve:
    """Two-point rendering-radius curve over node density.

    ``hd`` is the (density, radius) control point that slides along the
    packing-radius curve; ``ld`` is the free low-density control point.
    In ``ld_right`` mode the ld density is a cell density in
    [d_k, hd density]; in ``ld_left`` mode it is a local density inside
    ``sparse_range``.  Invalid placements raise CurveError rather than
    being clamped, mirroring the constrained drag of the interactive
    tool.
    """

    hd: Tuple[float, float]
    ld: Tuple[float, float]
    d_k: float
    r_pack1: float
    mode: str = LD_RIGHT
    sparse_range: Optional[Tuple[float, float]] = None
    epsilon: float = 1e-9

    def __post_init__(self):
        if self.mode not in (LD_LEFT, LD_RIGHT):
            raise CurveError(f"unknown mode {self.mode!r}")
        if not _finite(self.d_k, self.r_pack1) or not (
            0.0 < self.d_k <= 1.0 and self.r_pack1 > 0.0
        ):
            raise CurveError("d_k must be in (0, 1] and r_pack1 positive")
        d_hd, r_hd = self.hd
        d_ld, r_ld = self.ld
        if not _finite(d_hd, r_hd, d_ld, r_ld):
            raise CurveError("control points must be finite")
        if not (self.d_k <= d_hd <= 1.0):
            raise CurveError("hd density must lie in [d_k, 1]")
        ceiling = self.r_pack_at(d_hd)
        if abs(r_hd - ceiling) > self.epsilon * ceiling:
            raise CurveError("hd point must sit on the packing-radius curve")
        floor = self.r_pack1 * (1.0 - _REL_TOL)
        if r_ld < floor:
            raise CurveError("ld radius must not drop below r_pack1")
        if self.mode == LD_RIGHT:
            if not (self.d_k <= d_ld <= d_hd):
                raise CurveError("ld density must lie in [d_k, hd density]")
            if r_ld > self.r_pack_at(d_ld) * (1.0 + _REL_TOL):
                raise CurveError("ld point exceeds the packing-radius curve")
        else:
            if self.sparse_range is None:
                raise CurveError("ld_left mode needs a sparse density range")
            lo, hi = self.sparse_range
            if not (_finite(lo, hi) and 0.0 < lo <= hi):
                raise CurveError("invalid sparse density range")
            if not (lo <= d_ld <= hi):
                raise CurveError("ld density must lie inside the sparse range")

    def r_pack_at(self, density: float) -> float:
        """Packing radius of a cell with the given density.

        Below d_k the cell is padded up to the minimum node count, so
        the curve is flat there.
        """
        return self.r_pack1 / math.sqrt(max(density, self.d_k))

    def evaluate(
        self, density: float, local_density: Optional[float] = None
    ) -> float:
        """Rendering radius for one node.

        ``local_density`` is consulted only for sparse nodes
        (density < d_k) in ld_left mode.
        """
        if density < self.d_k:
            if self.mode == LD_RIGHT:
                return self.ld[1]
            if local_density is None:
                raise ParameterError(
                    "sparse node in ld_left mode needs a local density"
                )
            if local_density <= self.ld[0]:
                return self.ld[1]
            return self.hd[1]
        if self.mode == LD_RIGHT and density < self.ld[0]:
            return self.ld[1]
        if density <= self.hd[0]:
            return self.hd[1]
        return self.r_pack_at(density)

    def evaluate_array(
        self,
        density: np.ndarray,
        local_density: Optional[np.ndarray] = None,
    ) -> np.ndarray:
        """Vectorized twin of evaluate (same branch conventions)."""
        d = np.asarray(density, dtype=np.float64)
        d_hd, r_hd = self.hd
        d_ld, r_ld = self.ld
        out = np.empty_like(d)

        sparse = d < self.d_k
        if self.mode == LD_RIGHT:
            out[sparse] = r_ld
        else:
            if np.any(sparse):
                if local_density is None:
                    raise ParameterError(
                        "sparse nodes in ld_left mode need local densities"
                    )
                ld_vals = np.asarray(local_density, dtype=np.float64)
                out[sparse] = np.where(
                    ld_vals[sparse] <= d_ld, r_ld, r_hd
                )

        dense = ~sparse
        dd = d[dense]
        ceiling = self.r_pack1 / np.sqrt(np.maximum(dd, self.d_k))
        vals = np.where(dd <= d_hd, r_hd, ceiling)
        if self.mode == LD_RIGHT:
            vals = np.where(dd < d_ld, r_ld, vals)
        out[dense] = vals
        return out

    def to_json_dict(self) -> dict:
        rng = None if self.sparse_range is None else list(self.sparse_range)
        return {
            "hd": list(self.hd),
            "ld": list(self.ld),
            "d_k": self.d_k,
            "r_pack1": self.r_pack1,
            "mode": self.mode,
            "sparse_range": rng,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "RadiusCurve":
        rng = obj.get("sparse_range")
        return cls(
            hd=tuple(obj["hd"]),
            ld=tuple(obj["ld"]),
            d_k=float(obj["d_k"]),
            r_pack1=float(obj["r_pack1"]),
            mode=obj.get("mode", LD_RIGHT),
            sparse_range=None if rng is None else tuple(rng),
        )


def load_curve(path: str) -> RadiusCurve:
    with open(path, "r", encoding="utf-8") as fh:
        return RadiusCurve.from_json_dict(json.load(fh))


def save_curve(curve: RadiusCurve, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(curve.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def default_curve(
    d_k: float,
    r_pack1: float,
    sparse_range: Optional[Tuple[float, float]] = None,
) -> RadiusCurve:
    """The identity configuration: every node renders at r_pack1."""
    return RadiusCurve(
        hd=(1.0, r_pack1),
        ld=(d_k, r_pack1),
        d_k=d_k,
        r_pack1=r_pack1,
        mode=LD_RIGHT,
        sparse_range=sparse_range,
    )


def classify_zone(
    density: float, r: float, d_k: float, r_pack1: float
) -> str:
    """Which configuration zone the (density, radius) pair falls in.

    restricted: below the global floor; safe/unsafe: under/over the
    packing ceiling where one exists; sparse: left of the d_k boundary.
    """
    if r < r_pack1:
        return "restricted"
    if density < d_k:
        return "sparse"
    ceiling = r_pack1 / math.sqrt(max(density, d_k))
    return "safe" if r <= ceiling else "unsafe"


def local_density(
    x: np.ndarray, y: np.ndarray, neighbors: int = LOCAL_DENSITY_NEIGHBORS
) -> np.ndarray:
    """Reciprocal of the mean distance to the nearest neighbors.

    Computed in whatever coordinates are passed in; the configuration
    model uses the packed layout coordinates.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = x.shape[0]
    if n < 2:
        return np.ones(n, dtype=np.float64)
    k = min(neighbors, n - 1)
    tree = cKDTree(np.column_stack((x, y)))
    dist, _ = tree.query(np.column_stack((x, y)), k=k + 1, workers=-1)
    mean = dist[:, 1:].mean(axis=1)
    return 1.0 / mean


def sparse_range_of(
    densities: np.ndarray, local_densities: np.ndarray, d_k: float
) -> Optional[Tuple[float, float]]:
    """Range of local densities over the sparse nodes, None if there
    are none."""
    mask = np.asarray(densities) < d_k
    if not np.any(mask):
        return None
    vals = np.asarray(local_densities)[mask]
    return float(vals.min()), float(vals.max())


def apply(layout: Layout, curve: RadiusCurve) -> Layout:
    """Re-render a layout through a curve: every data node's r_draw is
    recomputed from its density.  Positions, packing radii and dummy
    nodes are left alone.

    Local densities for sparse nodes are computed from the packed
    coordinates of the data nodes on demand.
    """
    nodes = layout.nodes
    data_idx = [i for i, nd in enumerate(nodes) if not nd.is_dummy]
    if not data_idx:
        return layout
    dens = np.array([nodes[i].density for i in data_idx], dtype=np.float64)
    loc = None
    if curve.mode == LD_LEFT and bool(np.any(dens < curve.d_k)):
        xs = np.array([nodes[i].x for i in data_idx], dtype=np.float64)
        ys = np.array([nodes[i].y for i in data_idx], dtype=np.float64)
        loc = local_density(xs, ys)
    radii = curve.evaluate_array(dens, loc)
    out = list(nodes)
    for m, i in enumerate(data_idx):
        out[i] = replace(nodes[i], r_draw=float(radii[m]))
    return Layout(
        nodes=tuple(out),
        bbox=layout.bbox,
        params=layout.params,
        num_max=layout.num_max,
        d_k=layout.d_k,
        r_pack1=layout.r_pack1,
    )

"""Quality scores for a re-layouted scatterplot.

Every metric scores a pair of index-aligned point sequences: the
original positions and the positions the layout moved them to.  Five
views of "did the layout keep the picture": displacement (how far
points traveled), neighborhood preservation (KNN overlap), shape
preservation (concentric-ring distance variance), density preservation
(local-density quantile drift) and overall similarity (rank agreement
of axis projections).
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from .core import GeometryError, ParameterError

DEFAULT_KNN = 10
DEFAULT_CIRCLES = 20
DEFAULT_DIRECTIONS = 30

# Below this count neighbor queries run against the full distance
# matrix with explicit (distance, index) ordering; above it a k-d tree
# answers them.
_EXACT_NEIGHBOR_LIMIT = 2048


@dataclass(frozen=True)
class MetricReport:
    """The five scores plus the parameters they were computed with."""

    displacement: float
    knn: float
    shape: float
    density: float
    overall: float
    knn_k: int = DEFAULT_KNN
    n_circles: int = DEFAULT_CIRCLES
    n_directions: int = DEFAULT_DIRECTIONS

    def to_json_dict(self) -> dict:
        return {
            "displacement": self.displacement,
            "knn": self.knn,
            "shape": self.shape,
            "density": self.density,
            "overall": self.overall,
            "params": {
                "knn_k": self.knn_k,
                "n_circles": self.n_circles,
                "n_directions": self.n_directions,
            },
        }


def _as_points(seq: Sequence, name: str) -> np.ndarray:
    pts = np.asarray(seq, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ParameterError(f"{name} must be a sequence of (x, y) pairs")
    if not np.all(np.isfinite(pts)):
        raise ParameterError(f"{name} contains non-finite coordinates")
    return pts


def _paired(s: Sequence, s_prime: Sequence) -> Tuple[np.ndarray, np.ndarray]:
    a = _as_points(s, "S")
    b = _as_points(s_prime, "S'")
    if a.shape[0] != b.shape[0]:
        raise ParameterError("point sequences must have equal length")
    if a.shape[0] == 0:
        raise ParameterError("point sequences must be non-empty")
    return a, b


def _width_normalized(pts: np.ndarray, name: str) -> np.ndarray:
    width = float(pts[:, 0].max() - pts[:, 0].min())
    if width <= 0.0:
        raise GeometryError(f"degenerate scatterplot: {name} has zero width")
    return pts / width


# ===== displacement =====


def displacement(s: Sequence, s_prime: Sequence) -> float:
    """Mean distance points traveled, in units of the bounding-box
    width, after both sides are scaled to width one and their
    bounding-box centers are aligned."""
    a, b = _paired(s, s_prime)
    a = _width_normalized(a, "S")
    b = _width_normalized(b, "S'")
    ca = (a.min(axis=0) + a.max(axis=0)) / 2.0
    cb = (b.min(axis=0) + b.max(axis=0)) / 2.0
    d = (a - ca) - (b - cb)
    return float(np.mean(np.hypot(d[:, 0], d[:, 1])))


# ===== neighbor machinery =====


def _knn_exact(pts: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """(indices, distances) of the k nearest neighbors per point, ties
    broken by smaller index, via the full distance matrix."""
    n = pts.shape[0]
    d2 = np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=2)
    np.fill_diagonal(d2, np.inf)
    order = np.argsort(d2, axis=1, kind="stable")[:, :k]
    rows = np.arange(n)[:, None]
    return order, np.sqrt(d2[rows, order])


def _knn_tree(pts: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """Tree-backed variant of _knn_exact.

    Queries a few extra neighbors so distance ties near the cutoff can
    still be resolved by index before trimming to k.
    """
    n = pts.shape[0]
    kq = min(n, k + 4)
    dist, idx = cKDTree(pts).query(pts, k=kq, workers=-1)
    out_i = np.empty((n, k), dtype=np.int64)
    out_d = np.empty((n, k), dtype=np.float64)
    for i in range(n):
        keep = idx[i] != i
        di, ii = dist[i][keep], idx[i][keep]
        sel = np.lexsort((ii, di))[:k]
        out_i[i] = ii[sel]
        out_d[i] = di[sel]
    return out_i, out_d


def _knn(pts: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
    if pts.shape[0] <= _EXACT_NEIGHBOR_LIMIT:
        return _knn_exact(pts, k)
    return _knn_tree(pts, k)


def knn_preservation(s: Sequence, s_prime: Sequence, k: int = DEFAULT_KNN) -> float:
    """Mean fractional overlap of each point's k-nearest-neighbor set
    before and after the layout."""
    a, b = _paired(s, s_prime)
    n = a.shape[0]
    if k < 1:
        raise ParameterError("k must be >= 1")
    if n <= k:
        raise ParameterError("need more points than neighbors")
    ia, _ = _knn(a, k)
    ib, _ = _knn(b, k)
    shared = np.zeros(n, dtype=np.int64)
    chunk = 4096
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        eq = ia[lo:hi, :, None] == ib[lo:hi, None, :]
        shared[lo:hi] = eq.any(axis=2).sum(axis=1)
    return float(np.mean(shared / k))


# ===== shape preservation =====


def shape_preservation(
    s: Sequence, s_prime: Sequence, n_circles: int = DEFAULT_CIRCLES
) -> float:
    """Ring-band distance variance.

    Points are grouped by the nearest of n_circles concentric circles
    around the centroid of S (radii evenly spaced up to the farthest
    point).  The score is the mean, over non-empty groups, of the
    variance of the group's distances to the centroid of S' after S'
    is scaled to bounding-box width one.
    """
    a, b = _paired(s, s_prime)
    n = a.shape[0]
    if n_circles < 1:
        raise ParameterError("n_circles must be >= 1")
    if n < n_circles:
        raise ParameterError("need at least as many points as circles")
    da = np.hypot(*(a - a.mean(axis=0)).T)
    max_d = float(da.max())
    if max_d <= 0.0:
        raise GeometryError("degenerate scatterplot: all points coincide")
    spacing = max_d / n_circles
    ring = np.clip(np.rint(da / spacing).astype(np.int64), 1, n_circles)

    bn = _width_normalized(b, "S'")
    db = np.hypot(*(bn - bn.mean(axis=0)).T)

    variances: List[float] = []
    for j in range(1, n_circles + 1):
        grp = db[ring == j]
        if grp.size:
            variances.append(float(np.var(grp)))
    return float(np.mean(variances))


# ===== density preservation =====


def _density_quantiles(pts: np.ndarray, k: int) -> np.ndarray:
    """Quantile of each point when ranked by mean distance to its k
    nearest neighbors (stable tie-break by index)."""
    n = pts.shape[0]
    _, dist = _knn(pts, k)
    avg = dist.mean(axis=1)
    order = np.lexsort((np.arange(n), avg))
    rank = np.empty(n, dtype=np.float64)
    rank[order] = np.arange(n, dtype=np.float64)
    return rank / (n - 1)


def density_preservation(
    s: Sequence, s_prime: Sequence, k: int = DEFAULT_KNN
) -> float:
    """Mean absolute shift of the local-density quantile per point."""
    a, b = _paired(s, s_prime)
    n = a.shape[0]
    if k < 1:
        raise ParameterError("k must be >= 1")
    if n <= k:
        raise ParameterError("need more points than neighbors")
    qa = _density_quantiles(a, k)
    qb = _density_quantiles(b, k)
    return float(np.mean(np.abs(qa - qb)))


# ===== overall similarity =====


def _count_inversions(seq: np.ndarray) -> int:
    """Inversion count of a permutation by bottom-up merging."""
    arr = np.asarray(seq, dtype=np.int64).copy()
    n = arr.size
    inv = 0
    if n < 2:
        return 0
    # first level vectorized: adjacent pairs
    m = n - (n % 2)
    left, right = arr[0:m:2].copy(), arr[1:m:2].copy()
    inv += int(np.count_nonzero(left > right))
    arr[0:m:2] = np.minimum(left, right)
    arr[1:m:2] = np.maximum(left, right)
    width = 2
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            if mid >= hi:
                continue
            run_l = arr[lo:mid]
            run_r = arr[mid:hi]
            le = np.searchsorted(run_l, run_r, side="right")
            inv += int(run_l.size * run_r.size - le.sum())
            merged = np.concatenate((run_l, run_r))
            merged.sort()
            arr[lo:hi] = merged
        width *= 2
    return inv


def _tau_of_orders(order_a: np.ndarray, order_b: np.ndarray) -> float:
    """Kendall rank correlation between two total orderings of the
    same index set (no ties by construction)."""
    n = order_a.size
    pos_b = np.empty(n, dtype=np.int64)
    pos_b[order_b] = np.arange(n, dtype=np.int64)
    inv = _count_inversions(pos_b[order_a])
    total = n * (n - 1) // 2
    return (total - 2 * inv) / total


def overall_similarity(
    s: Sequence, s_prime: Sequence, n_directions: int = DEFAULT_DIRECTIONS
) -> float:
    """Mean Kendall correlation of the point orderings along evenly
    spaced projection directions covering a half turn."""
    a, b = _paired(s, s_prime)
    n = a.shape[0]
    if n < 2:
        raise ParameterError("need at least two points")
    if n_directions < 1:
        raise ParameterError("n_directions must be >= 1")
    idx = np.arange(n, dtype=np.int64)
    taus = np.empty(n_directions, dtype=np.float64)
    for j in range(n_directions):
        ang = j * math.pi / n_directions
        ux, uy = math.cos(ang), math.sin(ang)
        pa = a[:, 0] * ux + a[:, 1] * uy
        pb = b[:, 0] * ux + b[:, 1] * uy
        order_a = np.lexsort((idx, pa))
        order_b = np.lexsort((idx, pb))
        taus[j] = _tau_of_orders(order_a, order_b)
    return float(np.mean(taus))


# ===== bundle =====


def compute_all(
    s: Sequence,
    s_prime: Sequence,
    knn_k: int = DEFAULT_KNN,
    n_circles: int = DEFAULT_CIRCLES,
    n_directions: int = DEFAULT_DIRECTIONS,
) -> MetricReport:
    """All five scores for one pair of point sequences."""
    return MetricReport(
        displacement=displacement(s, s_prime),
        knn=knn_preservation(s, s_prime, knn_k),
        shape=shape_preservation(s, s_prime, n_circles),
        density=density_preservation(s, s_prime, knn_k),
        overall=overall_similarity(s, s_prime, n_directions),
        knn_k=knn_k,
        n_circles=n_circles,
        n_directions=n_directions,
    )

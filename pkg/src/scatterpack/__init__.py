"""Overlap-free scatterplot layout.

Turns an overdrawn 2D scatterplot into a set of non-overlapping
circles that preserve the original density field: points are
transcribed into per-cell circles (plus space-holding dummies in
sparse cells), packed inside-out along a polar front chain, and given
rendering radii from a configurable density/radius curve.  A metric
suite scores how much of the original picture survived.
"""

from .core import (
    DataPoint,
    EPS_ACCEPT,
    EPS_CONSTRUCT,
    GeometryError,
    Layout,
    LayoutParams,
    Node,
    ParameterError,
    check_mutual_exclusion,
    overlap_pairs,
)
from .metrics import (
    MetricReport,
    compute_all,
    density_preservation,
    displacement,
    knn_preservation,
    overall_similarity,
    shape_preservation,
)
from .packing import pack, pack_arrays, polarize, tangent_position
from .pipeline import layout_points, layout_xy
from .radius import (
    CurveError,
    RadiusCurve,
    classify_zone,
    default_curve,
    local_density,
)
from .transcribe import (
    TranscriptionResult,
    gridding,
    spread_singularities,
    transcribe,
    transcription_size,
)

__version__ = "0.1.0"

__all__ = [
    "DataPoint",
    "EPS_ACCEPT",
    "EPS_CONSTRUCT",
    "GeometryError",
    "Layout",
    "LayoutParams",
    "MetricReport",
    "Node",
    "ParameterError",
    "CurveError",
    "RadiusCurve",
    "TranscriptionResult",
    "check_mutual_exclusion",
    "classify_zone",
    "compute_all",
    "default_curve",
    "density_preservation",
    "displacement",
    "gridding",
    "knn_preservation",
    "layout_points",
    "layout_xy",
    "local_density",
    "overall_similarity",
    "overlap_pairs",
    "pack",
    "pack_arrays",
    "polarize",
    "shape_preservation",
    "spread_singularities",
    "tangent_position",
    "transcribe",
    "transcription_size",
    "__version__",
]

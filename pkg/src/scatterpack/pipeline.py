"""One-call convenience wrappers over transcribe + pack."""

from dataclasses import replace
from typing import Optional, Sequence

import numpy as np

from .core import DataPoint, Layout, LayoutParams
from .packing import pack
from .transcribe import transcribe


def layout_points(
    points: Sequence[DataPoint],
    params: Optional[LayoutParams] = None,
    spread: bool = True,
) -> Layout:
    """Full pipeline: density transcription, packing, density context
    attached to the resulting layout."""
    params = params or LayoutParams()
    tr = transcribe(points, params, spread=spread)
    lay = pack(tr.nodes, params=params)
    return replace(
        lay, num_max=tr.num_max, d_k=tr.d_k, r_pack1=tr.r_pack1
    )


def layout_xy(
    x: np.ndarray,
    y: np.ndarray,
    params: Optional[LayoutParams] = None,
    spread: bool = True,
) -> Layout:
    """layout_points for bare coordinate arrays."""
    pts = [
        DataPoint(float(xv), float(yv), index=i)
        for i, (xv, yv) in enumerate(zip(x, y))
    ]
    return layout_points(pts, params, spread=spread)

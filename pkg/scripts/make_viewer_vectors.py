"""Emit the curve test vectors the browser viewer checks itself against.

Writes frontend/test/vectors.json with three sections:

- evaluate_cases: curves paired with (density, local density, radius)
  triples straight from RadiusCurve.evaluate
- sample_layout: a small packed layout with per-node local densities
  and the full r_draw arrays for a couple of curves, so the viewer can
  check its node-level application end to end
- curve_file: the exact text save_curve writes, so the viewer's parser
  is tested against the real file format
"""

import json
import math
import os
import tempfile

import numpy as np

from scatterpack import layout_xy
from scatterpack.bench import mixture_instance
from scatterpack.radius import (
    LD_LEFT,
    LD_RIGHT,
    RadiusCurve,
    default_curve,
    local_density,
    save_curve,
    sparse_range_of,
)

OUT = os.path.join(os.path.dirname(__file__), "..", "frontend", "test", "vectors.json")


def curve_doc(curve):
    return curve.to_json_dict()


def eval_cases(d_k, r1, srange):
    rng = np.random.default_rng(2026)
    curves = [default_curve(d_k, r1)]
    for i in range(6):
        d_hd = d_k + (1.0 - d_k) * rng.uniform(0.3, 1.0)
        d_ld = d_k + (d_hd - d_k) * rng.uniform(0.0, 0.9)
        ceil_ld = r1 / math.sqrt(d_ld)
        r_ld = r1 + (ceil_ld - r1) * rng.uniform(0.0, 1.0 - 1e-9)
        curves.append(
            RadiusCurve(
                hd=(d_hd, r1 / math.sqrt(d_hd)),
                ld=(d_ld, r_ld),
                d_k=d_k,
                r_pack1=r1,
                mode=LD_RIGHT,
            )
        )
    lo, hi = srange
    for i in range(5):
        d_hd = d_k + (1.0 - d_k) * rng.uniform(0.2, 1.0)
        split = lo + (hi - lo) * rng.uniform(0.0, 1.0)
        curves.append(
            RadiusCurve(
                hd=(d_hd, r1 / math.sqrt(d_hd)),
                ld=(split, r1 * rng.uniform(1.0, 3.0)),
                d_k=d_k,
                r_pack1=r1,
                mode=LD_LEFT,
                sparse_range=srange,
            )
        )

    cases = []
    for curve in curves:
        d_hd = curve.hd[0]
        d_ld = curve.ld[0]
        densities = [
            d_k * 0.25,
            d_k * 0.999,
            d_k,
            min(1.0, d_k * 1.5),
            (d_k + d_hd) / 2.0,
            d_hd,
            min(1.0, d_hd * 1.000001),
            (d_hd + 1.0) / 2.0,
            1.0,
        ]
        if curve.mode == LD_RIGHT:
            densities += [d_ld, max(d_k, d_ld * 0.999), min(d_hd, d_ld * 1.001)]
        inputs = []
        for d in densities:
            if curve.mode == LD_LEFT and d < d_k:
                locs = [lo, (lo + hi) / 2.0, curve.ld[0], hi]
            else:
                locs = [None]
            for loc in locs:
                inputs.append(
                    {
                        "density": d,
                        "local": loc,
                        "expected": curve.evaluate(d, loc),
                    }
                )
        cases.append({"curve": curve_doc(curve), "inputs": inputs})
    return cases


def sample_layout():
    x, y = mixture_instance(300, seed=17, clusters=4, span=60.0)
    layout = layout_xy(x, y)
    d_k, r1 = layout.d_k, layout.r_pack1
    dens = layout.densities()
    pos = layout.positions()
    loc = local_density(pos[:, 0], pos[:, 1])
    srange = sparse_range_of(dens, loc, d_k)
    assert srange is not None, "sample layout needs sparse nodes"

    rng = np.random.default_rng(7)
    d_hd = d_k + (1.0 - d_k) * 0.6
    right = RadiusCurve(
        hd=(d_hd, r1 / math.sqrt(d_hd)),
        ld=(d_k + (d_hd - d_k) * 0.3, r1 * 1.4),
        d_k=d_k,
        r_pack1=r1,
        mode=LD_RIGHT,
    )
    left = RadiusCurve(
        hd=(d_hd, r1 / math.sqrt(d_hd)),
        ld=((srange[0] + srange[1]) / 2.0, r1 * 1.8),
        d_k=d_k,
        r_pack1=r1,
        mode=LD_LEFT,
        sparse_range=srange,
    )
    return {
        "d_k": d_k,
        "r_pack1": r1,
        "sparse_range": list(srange),
        "nodes": [
            {"x": float(pos[i, 0]), "y": float(pos[i, 1]), "density": float(dens[i])}
            for i in range(len(dens))
        ],
        "local": [float(v) for v in loc],
        "applied": [
            {
                "curve": curve_doc(c),
                "r_draw": [float(v) for v in c.evaluate_array(dens, loc)],
            }
            for c in (right, left)
        ],
    }


def main():
    sample = sample_layout()
    d_k, r1 = sample["d_k"], sample["r_pack1"]
    srange = tuple(sample["sparse_range"])
    cases = eval_cases(d_k, r1, srange)
    n_vec = sum(len(c["inputs"]) for c in cases)
    assert n_vec >= 100, n_vec

    with tempfile.NamedTemporaryFile("r", suffix=".json") as fh:
        save_curve(RadiusCurve.from_json_dict(cases[3]["curve"]), fh.name)
        curve_text = open(fh.name).read()

    doc = {
        "evaluate_cases": cases,
        "sample_layout": sample,
        "curve_file": curve_text,
    }
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    print(f"{n_vec} evaluate vectors, {len(sample['nodes'])} sample nodes -> {OUT}")


if __name__ == "__main__":
    main()

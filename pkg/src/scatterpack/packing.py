"""Polar front-chain circle packing.

Nodes are sorted by distance from their common centroid and placed one
at a time, innermost first, onto a growing frontier of circles (a
cyclic chain).  Each node aims for its original angle about the
centroid: the placement scans a window of the frontier centered on that
angle, computes the circle tangent to each consecutive frontier pair,
and keeps the reachable position whose angle is closest to the target.

Candidate positions are validated against every already placed circle
through a uniform spatial hash, so the output is overlap-free by
construction, not by trust in the frontier bookkeeping.  If a window
holds no viable pair the window is doubled.  When even the full
frontier offers nothing the chain has usually curled onto itself: the
arc occluding the best blocked candidate is cut out of the chain (the
circles stay in the layout, they just stop hosting tangencies) and the
scan retries.  As a last resort the node is parked on a ray at its
target angle just beyond the current outer reach, which can never
overlap anything.
"""

import math
from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numba import njit

from .core import (
    EPS_CONSTRUCT,
    TWO_PI,
    GeometryError,
    Layout,
    LayoutParams,
    Node,
    ParameterError,
)

# Window half-width defaults: grows with sqrt(node count), capped so a
# million-node pack stays well inside interactive time.
_TH_MIN = 4
_TH_MAX = 48
_TH_COEFF = 0.1

_N_BUCKETS = 1024  # angular index over the frontier
_REFINE_WALK = 64  # chain steps of greedy angular refinement
_CUT_WALK = 4096  # chain steps searched for the arc behind a blocker
_MAX_CLIMB = 16  # blocked-window hops toward the live frontier per node


# ===== geometry =====


@njit(cache=True)
def _circdiff(a, b):
    d = abs(a - b)
    if d > math.pi:
        d = TWO_PI - d
    return d


@njit(cache=True)
def _tangent_candidates(x1, y1, r1, x2, y2, r2, rn, _eps):
    """Both centers for a circle of radius rn externally tangent to the
    two given circles.  Returns (ok, ax, ay, bx, by)."""
    d1 = r1 + rn
    d2 = r2 + rn
    dx = x2 - x1
    dy = y2 - y1
    dd = dx * dx + dy * dy
    if dd <= 0.0:
        return False, 0.0, 0.0, 0.0, 0.0
    d = math.sqrt(dd)
    if d > d1 + d2 or d < abs(d1 - d2):
        return False, 0.0, 0.0, 0.0, 0.0
    a = (d1 * d1 - d2 * d2 + dd) / (2.0 * d)
    h2 = d1 * d1 - a * a
    if h2 < 0.0:
        h2 = 0.0
    h = math.sqrt(h2)
    ux = dx / d
    uy = dy / d
    bx = x1 + a * ux
    by = y1 + a * uy
    ox = -uy * h
    oy = ux * h
    return True, bx + ox, by + oy, bx - ox, by - oy


def tangent_position(
    new_r: float,
    c1: Tuple[float, float, float],
    c2: Tuple[float, float, float],
    outward: Optional[Tuple[float, float]] = None,
) -> Tuple[float, float]:
    """Center of a circle of radius new_r externally tangent to c1 and c2.

    Each circle is an (x, y, r) triple.  Of the two mirror solutions the
    one with the larger projection onto ``outward`` is returned; without
    an ``outward`` hint the solution farther from the coordinate origin
    wins (ties resolved toward larger y, then larger x).  Raises
    GeometryError when the circles are coincident or too far apart to
    both touch a circle of the requested radius.
    """
    if new_r <= 0.0:
        raise ParameterError("new_r must be positive")
    x1, y1, r1 = c1
    x2, y2, r2 = c2
    ok, ax, ay, bx, by = _tangent_candidates(
        x1, y1, r1, x2, y2, r2, new_r, EPS_CONSTRUCT
    )
    if not ok:
        raise GeometryError("no tangent position")
    if outward is not None:
        proj = (ax - bx) * outward[0] + (ay - by) * outward[1]
        if proj > 0.0:
            return ax, ay
        if proj < 0.0:
            return bx, by
    qa = ax * ax + ay * ay
    qb = bx * bx + by * by
    if qa > qb:
        return ax, ay
    if qb > qa:
        return bx, by
    if ay > by or (ay == by and ax >= bx):
        return ax, ay
    return bx, by


# ===== placement kernel =====


@njit(cache=True)
def _pack_core(r, tang, px, py, th0, r_split, eps, stats):
    """Place nodes 3..n-1; px/py[0:3] hold the seed triple.

    ``r_split`` separates grid-indexed circles from the (few) oversized
    ones kept on a linear list; see pack_arrays.  ``stats`` is an int64
    out-array of length >= 5 collecting counters: ray fallbacks, chain
    cuts, nodes dropped by cuts, window doublings and tangent pairs
    scanned.
    """
    n = r.shape[0]
    one_minus_eps = 1.0 - eps

    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    in_chain = np.zeros(n, np.bool_)
    pang = np.zeros(n, np.float64)
    # Angular index: per sector, the outermost chain circle seen there.
    # The outermost circle at an angle can never be buried under later
    # growth, so lookups through it always land on live frontier.
    bucket = np.full(_N_BUCKETS, -1, np.int64)
    bucket_key = np.full(_N_BUCKETS, -1.0, np.float64)

    # --- spatial hash over placed circles ---
    # Cells are sized by r_split, not the maximum radius: one huge
    # outlier would otherwise force a handful of megacells holding
    # everything.  Circles wider than a cell go on the plain list
    # checked alongside the grid; by choice of r_split they are rare.
    rmax = 0.0
    area2 = 0.0
    for i in range(n):
        if r[i] > rmax:
            rmax = r[i]
        area2 += r[i] * r[i]
    half = 1.6 * math.sqrt(area2) + 8.0 * rmax
    cell = 2.0 * r_split
    if cell < 2.0 * half / 4096.0:
        cell = 2.0 * half / 4096.0
    dim = int(2.0 * half / cell) + 3
    head = np.full(dim * dim, -1, np.int64)
    gnext = np.full(n, -1, np.int64)
    big_ids = np.empty(n, np.int64)
    nb = 0

    reach = 0.0  # max over placed circles of (center distance + radius)

    for i in range(3):
        a = math.atan2(py[i], px[i])
        if a < 0.0:
            a += TWO_PI
        pang[i] = a
    o0, o1, o2 = 0, 1, 2
    if pang[o1] < pang[o0]:
        o0, o1 = o1, o0
    if pang[o2] < pang[o1]:
        o1, o2 = o2, o1
        if pang[o1] < pang[o0]:
            o0, o1 = o1, o0
    nxt[o0] = o1
    nxt[o1] = o2
    nxt[o2] = o0
    prv[o1] = o0
    prv[o2] = o1
    prv[o0] = o2
    anchor = 0
    half_cell = 0.5 * cell
    for i in range(3):
        in_chain[i] = True
        d_i = math.sqrt(px[i] * px[i] + py[i] * py[i]) + r[i]
        bi = int(pang[i] * _N_BUCKETS / TWO_PI) % _N_BUCKETS
        if d_i >= bucket_key[bi]:
            bucket[bi] = i
            bucket_key[bi] = d_i
        if r[i] <= half_cell:
            gx = int((px[i] + half) / cell)
            gy = int((py[i] + half) / cell)
            c3 = gy * dim + gx
            gnext[i] = head[c3]
            head[c3] = i
        else:
            big_ids[nb] = i
            nb += 1
        if d_i > reach:
            reach = d_i

    fallbacks = 0

    for i in range(3, n):
        theta = tang[i]
        ux = math.cos(theta)
        uy = math.sin(theta)
        rn = r[i]

        # --- frontier node nearest the target angle ---
        pos = -1
        b0 = int(theta * _N_BUCKETS / TWO_PI) % _N_BUCKETS
        for dlt in range(_N_BUCKETS // 2 + 1):
            b1 = (b0 + dlt) % _N_BUCKETS
            v = bucket[b1]
            if v >= 0:
                if in_chain[v]:
                    pos = v
                    break
                bucket[b1] = -1
                bucket_key[b1] = -1.0
            b2 = (b0 - dlt) % _N_BUCKETS
            v = bucket[b2]
            if v >= 0:
                if in_chain[v]:
                    pos = v
                    break
                bucket[b2] = -1
                bucket_key[b2] = -1.0
        if pos == -1:
            pos = anchor
        bd = _circdiff(pang[pos], theta)
        c = nxt[pos]
        steps = 0
        while steps < _REFINE_WALK:
            d = _circdiff(pang[c], theta)
            if d < bd:
                bd = d
                pos = c
                c = nxt[c]
                steps += 1
            else:
                break
        c = prv[pos]
        steps = 0
        while steps < _REFINE_WALK:
            d = _circdiff(pang[c], theta)
            if d < bd:
                bd = d
                pos = c
                c = prv[c]
                steps += 1
            else:
                break

        t = th0
        climbs = 0
        placed = False
        while not placed:
            # window [pos - t, pos + t]
            start = pos
            sb = 0
            while sb < t:
                p2 = prv[start]
                if p2 == pos:
                    break
                start = p2
                sb += 1
            best_a = -1
            best_b = -1
            best_x = 0.0
            best_y = 0.0
            best_sc = 1.0e308
            cut_a = -1
            cut_b = -1
            cut_e = -1
            cut_sc = 1.0e308
            covered = False
            a = start
            pair_i = 0
            max_pairs = 2 * t
            while pair_i < max_pairs:
                b = nxt[a]
                ok, s1x, s1y, s2x, s2y = _tangent_candidates(
                    px[a], py[a], r[a], px[b], py[b], r[b], rn, eps
                )
                if ok:
                    q1 = s1x * s1x + s1y * s1y
                    q2 = s2x * s2x + s2y * s2y
                    if q1 > q2:
                        cx_ = s1x
                        cy_ = s1y
                        qc = q1
                    elif q2 > q1:
                        cx_ = s2x
                        cy_ = s2y
                        qc = q2
                    elif s1y > s2y or (s1y == s2y and s1x >= s2x):
                        cx_ = s1x
                        cy_ = s1y
                        qc = q1
                    else:
                        cx_ = s2x
                        cy_ = s2y
                        qc = q2

                    # Angular miss scored as -cos(angle - theta): monotone
                    # in the wrapped angular distance, no atan2 needed.
                    if qc > 0.0:
                        sc = -(cx_ * ux + cy_ * uy) / math.sqrt(qc)
                    else:
                        sc = 1.0

                    # The grid probe walks memory; skip it unless this
                    # candidate would actually improve on the best one.
                    if sc < best_sc:
                        while (
                            cx_ + half < cell
                            or cx_ + half >= (dim - 2) * cell
                            or cy_ + half < cell
                            or cy_ + half >= (dim - 2) * cell
                        ):
                            half *= 2.0
                            dim = int(2.0 * half / cell) + 3
                            head = np.full(dim * dim, -1, np.int64)
                            for jj in range(i):
                                if r[jj] > half_cell:
                                    continue
                                ggx = int((px[jj] + half) / cell)
                                ggy = int((py[jj] + half) / cell)
                                c3 = ggy * dim + ggx
                                gnext[jj] = head[c3]
                                head[c3] = jj

                        blocker = -1
                        for bb in range(nb):
                            jn = big_ids[bb]
                            ddx = px[jn] - cx_
                            ddy = py[jn] - cy_
                            lim = (r[jn] + rn) * one_minus_eps
                            if ddx * ddx + ddy * ddy < lim * lim:
                                blocker = jn
                                break
                        if blocker == -1:
                            gx = int((cx_ + half) / cell)
                            gy = int((cy_ + half) / cell)
                            if rn <= half_cell:
                                # Grid members are no wider than half a
                                # cell, so 3x3 sees every one an ordinary
                                # candidate could touch.
                                for oy in range(-1, 2):
                                    row = (gy + oy) * dim + gx
                                    for ox in range(-1, 2):
                                        jn = head[row + ox]
                                        while jn != -1:
                                            ddx = px[jn] - cx_
                                            ddy = py[jn] - cy_
                                            lim = (r[jn] + rn) * one_minus_eps
                                            if ddx * ddx + ddy * ddy < lim * lim:
                                                blocker = jn
                                                break
                                            jn = gnext[jn]
                                        if blocker != -1:
                                            break
                                    if blocker != -1:
                                        break
                            else:
                                # Oversized candidate: widen the ring to
                                # rn + cell/2 and clamp at the grid edge
                                # (nothing lives outside it).
                                nring = int((rn + half_cell) / cell) + 1
                                y0 = gy - nring
                                if y0 < 0:
                                    y0 = 0
                                y1 = gy + nring
                                if y1 > dim - 1:
                                    y1 = dim - 1
                                x0 = gx - nring
                                if x0 < 0:
                                    x0 = 0
                                x1 = gx + nring
                                if x1 > dim - 1:
                                    x1 = dim - 1
                                for gy2 in range(y0, y1 + 1):
                                    row = gy2 * dim
                                    for gx2 in range(x0, x1 + 1):
                                        jn = head[row + gx2]
                                        while jn != -1:
                                            ddx = px[jn] - cx_
                                            ddy = py[jn] - cy_
                                            lim = (r[jn] + rn) * one_minus_eps
                                            if ddx * ddx + ddy * ddy < lim * lim:
                                                blocker = jn
                                                break
                                            jn = gnext[jn]
                                        if blocker != -1:
                                            break
                                    if blocker != -1:
                                        break

                        if blocker == -1:
                            best_sc = sc
                            best_a = a
                            best_b = b
                            best_x = cx_
                            best_y = cy_
                        elif (
                            in_chain[blocker]
                            and blocker != a
                            and blocker != b
                            and sc < cut_sc
                        ):
                            # Remember where the frontier occludes itself
                            # in case the whole scan comes up empty.
                            cut_sc = sc
                            cut_a = a
                            cut_b = b
                            cut_e = blocker
                a = b
                pair_i += 1
                stats[4] += 1
                if a == start:
                    covered = True
                    break

            if best_a != -1:
                px[i] = best_x
                py[i] = best_y
                nxt[best_a] = i
                prv[i] = best_a
                nxt[i] = best_b
                prv[best_b] = i
            else:
                # No reachable candidate.  If the scan was blocked by the
                # chain itself the frontier has curled onto (or grown over)
                # this stretch: relink around the occluded arc on its
                # shorter side and rescan.  Removed nodes stay in the
                # layout, they just stop hosting tangencies.  Holding the
                # cut back until one widening has failed keeps ordinary
                # tight spots from shedding healthy frontier.
                cut_done = False
                if cut_a != -1 and covered:
                    fsteps = 0
                    c2 = nxt[cut_b]
                    while c2 != cut_e and fsteps < _CUT_WALK:
                        c2 = nxt[c2]
                        fsteps += 1
                    fwd_ok = c2 == cut_e
                    bsteps = 0
                    c2 = prv[cut_a]
                    while c2 != cut_e and bsteps < _CUT_WALK:
                        c2 = prv[c2]
                        bsteps += 1
                    bwd_ok = c2 == cut_e
                    if fwd_ok and (not bwd_ok or fsteps <= bsteps):
                        c2 = cut_b
                        while c2 != cut_e:
                            nx2 = nxt[c2]
                            in_chain[c2] = False
                            stats[2] += 1
                            bi = int(pang[c2] * _N_BUCKETS / TWO_PI) % _N_BUCKETS
                            if bucket[bi] == c2:
                                bucket[bi] = -1
                                bucket_key[bi] = -1.0
                            nxt[c2] = -1
                            prv[c2] = -1
                            c2 = nx2
                        nxt[cut_a] = cut_e
                        prv[cut_e] = cut_a
                        anchor = cut_a
                        pos = cut_a
                        cut_done = True
                    elif bwd_ok:
                        c2 = nxt[cut_e]
                        while c2 != cut_b:
                            nx2 = nxt[c2]
                            in_chain[c2] = False
                            stats[2] += 1
                            bi = int(pang[c2] * _N_BUCKETS / TWO_PI) % _N_BUCKETS
                            if bucket[bi] == c2:
                                bucket[bi] = -1
                                bucket_key[bi] = -1.0
                            nxt[c2] = -1
                            prv[c2] = -1
                            c2 = nx2
                        nxt[cut_e] = cut_b
                        prv[cut_b] = cut_e
                        anchor = cut_e
                        pos = cut_e
                        cut_done = True
                if cut_done:
                    stats[1] += 1
                    continue
                if not covered:
                    # A window whose candidates are all blocked usually
                    # sits on an overgrown stretch of the chain.  The
                    # blocking circles live one layer up, so hop onto the
                    # best one and rescan there instead of crawling the
                    # chain link by link.
                    if cut_e != -1 and climbs < _MAX_CLIMB:
                        climbs += 1
                        pos = cut_e
                        continue
                    t = t * 2
                    stats[3] += 1
                    continue
                # Whole frontier scanned, nothing reachable and nothing to
                # cut: park the node on its target ray beyond everything
                # placed so far.  Any placed circle then satisfies
                # |p - q| >= reach + rn - |q| >= r_q + rn, so the position
                # is always conflict-free.
                rad = (reach + rn) * (1.0 + 1e-12)
                px[i] = rad * math.cos(theta)
                py[i] = rad * math.sin(theta)
                best_a = pos
                best_b = nxt[pos]
                nxt[best_a] = i
                prv[i] = best_a
                nxt[i] = best_b
                prv[best_b] = i
                fallbacks += 1
                stats[0] += 1

            while (
                px[i] + half < cell
                or px[i] + half >= (dim - 2) * cell
                or py[i] + half < cell
                or py[i] + half >= (dim - 2) * cell
            ):
                half *= 2.0
                dim = int(2.0 * half / cell) + 3
                head = np.full(dim * dim, -1, np.int64)
                for jj in range(i):
                    if r[jj] > half_cell:
                        continue
                    ggx = int((px[jj] + half) / cell)
                    ggy = int((py[jj] + half) / cell)
                    c3 = ggy * dim + ggx
                    gnext[jj] = head[c3]
                    head[c3] = jj
            if rn <= half_cell:
                gx = int((px[i] + half) / cell)
                gy = int((py[i] + half) / cell)
                c3 = gy * dim + gx
                gnext[i] = head[c3]
                head[c3] = i
            else:
                big_ids[nb] = i
                nb += 1
            in_chain[i] = True
            ca = math.atan2(py[i], px[i])
            if ca < 0.0:
                ca += TWO_PI
            pang[i] = ca
            d_i = math.sqrt(px[i] * px[i] + py[i] * py[i]) + rn
            bi = int(ca * _N_BUCKETS / TWO_PI) % _N_BUCKETS
            if bucket[bi] == -1 or not in_chain[bucket[bi]] or d_i >= bucket_key[bi]:
                bucket[bi] = i
                bucket_key[bi] = d_i
            anchor = i
            if d_i > reach:
                reach = d_i
            placed = True

    return fallbacks


# ===== seed placements =====


def _wrapped_sq_error(base: np.ndarray, target: np.ndarray, phis: np.ndarray):
    d = (base[None, :] + phis[:, None] - target[None, :]) % TWO_PI
    d = np.minimum(d, TWO_PI - d)
    return (d * d).sum(axis=1)


def _seed_three(radii: np.ndarray, angles: np.ndarray) -> np.ndarray:
    """Mutually tangent triple, centroid at the origin, spun (and if it
    helps, mirrored) to track the three target angles."""
    r0, r1, r2 = radii
    d01 = r0 + r1
    d02 = r0 + r2
    d12 = r1 + r2
    ax = (d02 * d02 - d12 * d12 + d01 * d01) / (2.0 * d01)
    hy = math.sqrt(max(d02 * d02 - ax * ax, 0.0))
    phis = np.arange(720) * (TWO_PI / 720.0)
    best = None
    for sign in (1.0, -1.0):
        cs = np.array([[0.0, 0.0], [d01, 0.0], [ax, sign * hy]])
        cs = cs - cs.mean(axis=0)
        base = np.arctan2(cs[:, 1], cs[:, 0])
        sse = _wrapped_sq_error(base, angles, phis)
        bi = int(np.argmin(sse))
        if best is None or sse[bi] < best[0]:
            best = (float(sse[bi]), float(phis[bi]), cs)
    _, phi, cs = best
    rot = np.array(
        [[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]]
    )
    return cs @ rot.T


def _seed_two(radii: np.ndarray, angles: np.ndarray) -> np.ndarray:
    """Tangent pair along the bisector of the two target angles."""
    sx = math.cos(angles[0]) + math.cos(angles[1])
    sy = math.sin(angles[0]) + math.sin(angles[1])
    mu = angles[0] if sx * sx + sy * sy < 1e-24 else math.atan2(sy, sx)
    h = (radii[0] + radii[1]) / 2.0
    ux, uy = math.cos(mu), math.sin(mu)
    best = None
    for s in (1.0, -1.0):
        p = np.array([[s * h * ux, s * h * uy], [-s * h * ux, -s * h * uy]])
        err = 0.0
        for m in range(2):
            a = math.atan2(p[m, 1], p[m, 0])
            if a < 0.0:
                a += TWO_PI
            d = abs(a - angles[m])
            if d > math.pi:
                d = TWO_PI - d
            err += d * d
        if best is None or err < best[0]:
            best = (err, p)
    return best[1]


# ===== public operations =====


def polarize(
    nodes: Sequence[Node], center: Optional[Tuple[float, float]] = None
) -> List[Node]:
    """Attach polar coordinates about ``center`` (default: the centroid)
    to every node.  A node exactly at the center gets angle 0."""
    if len(nodes) == 0:
        raise ParameterError("empty node set")
    xs = np.fromiter((nd.x for nd in nodes), np.float64, len(nodes))
    ys = np.fromiter((nd.y for nd in nodes), np.float64, len(nodes))
    if center is None:
        cx, cy = float(xs.mean()), float(ys.mean())
    else:
        cx, cy = center
    dis = np.hypot(xs - cx, ys - cy)
    ang = np.arctan2(ys - cy, xs - cx)
    ang[ang < 0.0] += TWO_PI
    return [
        replace(nd, dis=float(dis[m]), angle=float(ang[m]))
        for m, nd in enumerate(nodes)
    ]


def resolve_th(th: Optional[int], n: int) -> int:
    if th is not None:
        if th < 1:
            raise ParameterError("th must be >= 1")
        return th
    return min(max(int(math.ceil(_TH_COEFF * math.sqrt(n))), _TH_MIN), _TH_MAX)


def pack_arrays(
    x: np.ndarray,
    y: np.ndarray,
    r: np.ndarray,
    th: Optional[int] = None,
    epsilon: float = EPS_CONSTRUCT,
    stats_out: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Array-level packing: returns packed centers about the packing
    origin, in input order.  The polar sort, the seed placement and the
    frontier loop all live behind this call.

    ``stats_out`` (int64, length >= 5) collects placement counters when
    given: ray fallbacks, chain cuts, nodes dropped by cuts, window
    doublings, tangent pairs scanned.
    """
    n = len(r)
    if n == 0:
        raise ParameterError("empty node set")
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    r = np.ascontiguousarray(r, dtype=np.float64)
    if np.any(r <= 0.0):
        raise ParameterError("radii must be positive")
    cx = x.mean()
    cy = y.mean()
    dis = np.hypot(x - cx, y - cy)
    ang = np.arctan2(y - cy, x - cx)
    ang[ang < 0.0] += TWO_PI

    order = np.lexsort((np.arange(n), ang, dis))
    r_s = np.ascontiguousarray(r[order])
    a_s = np.ascontiguousarray(ang[order])

    px = np.zeros(n, dtype=np.float64)
    py = np.zeros(n, dtype=np.float64)
    if n == 1:
        pass
    elif n == 2:
        px[:], py[:] = _seed_two(r_s, a_s).T
    else:
        seed = _seed_three(r_s[:3], a_s[:3])
        px[:3] = seed[:, 0]
        py[:3] = seed[:, 1]
        if n > 3:
            stats = np.zeros(5, dtype=np.int64)
            # Validation-grid cells follow the bulk of the radii: a few
            # giants among small circles would otherwise dictate
            # megacells holding everything.  With mild spreads the split
            # lands on the maximum and the outlier list stays empty.
            r_split = min(float(r_s.max()), 2.0 * float(np.quantile(r_s, 0.99)))
            _pack_core(r_s, a_s, px, py, resolve_th(th, n), r_split, epsilon, stats)
            if stats_out is not None:
                stats_out[: stats.shape[0]] += stats

    out_x = np.empty(n)
    out_y = np.empty(n)
    out_x[order] = px
    out_y[order] = py
    return out_x, out_y


def pack(
    nodes: Sequence[Node],
    th: Optional[int] = None,
    params: Optional[LayoutParams] = None,
) -> Layout:
    """Pack nodes into an overlap-free layout.

    Dummy nodes take part in the packing (they hold space for their
    sparse cells) and are dropped from the returned layout, whose nodes
    come back ordered by source index with their polar placement targets
    attached.  The packed cloud is shifted so its bounding box is
    centered where the input's was.
    """
    params = params or LayoutParams()
    n = len(nodes)
    if n == 0:
        raise ParameterError("empty node set")
    if th is None:
        th = params.th

    x = np.fromiter((nd.x for nd in nodes), np.float64, n)
    y = np.fromiter((nd.y for nd in nodes), np.float64, n)
    r = np.fromiter((nd.r_pack for nd in nodes), np.float64, n)
    cx = x.mean()
    cy = y.mean()
    dis = np.hypot(x - cx, y - cy)
    ang = np.arctan2(y - cy, x - cx)
    ang[ang < 0.0] += TWO_PI

    px, py = pack_arrays(x, y, r, th=th, epsilon=params.epsilon)

    keep = [m for m, nd in enumerate(nodes) if not nd.is_dummy]
    if len(keep) == 0:
        raise ParameterError("layout needs at least one data node")
    keep.sort(key=lambda m: nodes[m].source_index)

    # Recenter onto the input's footprint (a rigid shift: radii and
    # relative placement are already final).
    kept = np.asarray(keep)
    in_min_x = float(np.min(x[kept] - r[kept]))
    in_max_x = float(np.max(x[kept] + r[kept]))
    in_min_y = float(np.min(y[kept] - r[kept]))
    in_max_y = float(np.max(y[kept] + r[kept]))
    out_min_x = float(np.min(px[kept] - r[kept]))
    out_max_x = float(np.max(px[kept] + r[kept]))
    out_min_y = float(np.min(py[kept] - r[kept]))
    out_max_y = float(np.max(py[kept] + r[kept]))
    shift_x = (in_min_x + in_max_x) / 2.0 - (out_min_x + out_max_x) / 2.0
    shift_y = (in_min_y + in_max_y) / 2.0 - (out_min_y + out_max_y) / 2.0

    packed = tuple(
        replace(
            nodes[m],
            x=float(px[m] + shift_x),
            y=float(py[m] + shift_y),
            dis=float(dis[m]),
            angle=float(ang[m]),
        )
        for m in keep
    )
    return Layout(
        nodes=packed,
        bbox=Layout.bbox_of(packed),
        params=params,
    )

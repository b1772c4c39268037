"""Fused numba kernels that enumerate vertex pairs and apply the edge
insertion criterion.

Both samplers funnel through the same per-pair routine `_accept`, so their
floating-point behaviour is identical operand-for-operand; the coupled-sampler
equality test relies on this.  Per-pair randomness is recomputed on demand
from the counter-based stream (no stored state), which also makes the row
partitioning irrelevant to the result.

Geometry codes: 0 = euclidean_max, 1 = mcd.  Volume codes: 0 = exact,
1 = linearized (mcd only).  Y modes: 0 = min(Y1, Y2) against the full edge
probability (EIC), 1 = Y1 alone (the phase-1 criterion on the leading
coordinates).
"""

from __future__ import annotations

import numpy as np
from numba import njit

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV53 = float.fromhex("0x1.0p-53")

GEOM_EUCLIDEAN = 0
GEOM_MCD = 1
VOL_EXACT = 0
VOL_LINEARIZED = 1
YMODE_MIN = 0
YMODE_Y1 = 1


@njit(cache=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


@njit(cache=True, inline="always")
def _uniform(base, idx):
    return float(_mix64(base + (idx + np.uint64(1)) * _GOLDEN) >> np.uint64(11)) * _INV53


@njit(cache=True, inline="always")
def _pair_dist(pos, u, v, ncoords, geom):
    """min (mcd) or max (euclidean_max) torus difference over the first
    ncoords coordinates; coordinates are scanned in index order so that
    partial-coordinate and full-coordinate scans share their prefix exactly."""
    if geom == GEOM_MCD:
        r = 1.0
        for i in range(ncoords):
            a = abs(pos[u, i] - pos[v, i])
            if a > 0.5:
                a = 1.0 - a
            if a < r:
                r = a
    else:
        r = 0.0
        for i in range(ncoords):
            a = abs(pos[u, i] - pos[v, i])
            if a > 0.5:
                a = 1.0 - a
            if a > r:
                r = a
    return r


@njit(cache=True, inline="always")
def _ball_volume(r, dim, geom, volmode):
    if geom == GEOM_MCD:
        if volmode == VOL_LINEARIZED:
            return r
        s = 1.0 - 2.0 * r
        p = 1.0
        for _ in range(dim):
            p *= s
        return 1.0 - p
    t = 2.0 * r
    p = 1.0
    for _ in range(dim):
        p *= t
    if p > 1.0:
        p = 1.0
    return p


@njit(cache=True, inline="always")
def _accept(y, q, c, inv_alpha):
    """Edge test ``y < c * min(1, q^alpha)`` in a form with at most one pow.

    q is w_u*w_v / (n*V); the pow moves to the y side:
    ``y < c and (q >= 1 or (y/c)^(1/alpha) < q)``.  The cheap prefilter
    ``y < c*q`` is exact because q^alpha <= q for q <= 1.
    """
    if not (y < c * q):
        return False
    if y >= c:
        return False
    if q >= 1.0:
        return True
    return (y / c) ** inv_alpha < q


@njit(cache=True, inline="always")
def _pair_y(base1, base2, pidx, ymode):
    u1 = _uniform(base1, pidx)
    y1 = u1 * (2.0 - u1)  # inverse splitting CDF: 1-(1-u)^2
    if ymode == YMODE_Y1:
        return y1
    u2 = _uniform(base2, pidx)
    y2 = u2 * (2.0 - u2)
    return y1 if y1 < y2 else y2


@njit(cache=True, inline="always")
def _pair_test(pos, w, u, v, n, ncoords, dim, geom, volmode, c, inv_alpha, inv_n, base1, base2, ymode):
    r = _pair_dist(pos, u, v, ncoords, geom)
    vol = _ball_volume(r, dim, geom, volmode)
    if vol > 0.0:
        q = w[u] * w[v] * inv_n / vol
    else:
        q = np.inf
    lo, hi = (u, v) if u < v else (v, u)
    pidx = np.uint64(lo * (2 * n - lo - 1) // 2 + (hi - lo - 1))
    y = _pair_y(base1, base2, pidx, ymode)
    return _accept(y, q, c, inv_alpha)


@njit(cache=True)
def scan_rows(pos, w, n, u0, u1, ncoords, dim, geom, volmode, c, inv_alpha, base1, base2, ymode, out_u, out_v):
    """All pairs (u, v) with u0 <= u < u1 and u < v < n.  Returns the number
    of accepted edges; entries beyond the buffer capacity are counted but not
    stored (caller retries with a larger buffer)."""
    inv_n = 1.0 / n
    cap = out_u.shape[0]
    cnt = 0
    for u in range(u0, u1):
        for v in range(u + 1, n):
            if _pair_test(pos, w, u, v, n, ncoords, dim, geom, volmode, c, inv_alpha, inv_n, base1, base2, ymode):
                if cnt < cap:
                    out_u[cnt] = u
                    out_v[cnt] = v
                cnt += 1
    return cnt


@njit(cache=True)
def scan_within(pos, w, n, members, i0, i1, ncoords, dim, geom, volmode, c, inv_alpha, base1, base2, ymode, out_u, out_v):
    """Pairs (members[i], members[j]) with i0 <= i < i1 and i < j; members
    must be sorted ascending."""
    inv_n = 1.0 / n
    cap = out_u.shape[0]
    cnt = 0
    m = members.shape[0]
    for i in range(i0, i1):
        u = members[i]
        for j in range(i + 1, m):
            v = members[j]
            if _pair_test(pos, w, u, v, n, ncoords, dim, geom, volmode, c, inv_alpha, inv_n, base1, base2, ymode):
                if cnt < cap:
                    out_u[cnt] = u
                    out_v[cnt] = v
                cnt += 1
    return cnt


@njit(cache=True)
def scan_between(pos, w, n, left, i0, i1, right, ncoords, dim, geom, volmode, c, inv_alpha, base1, base2, ymode, out_u, out_v):
    """Pairs (left[i], right[j]) for i0 <= i < i1 over all j; the two vertex
    sets must be disjoint.  Emits endpoints in canonical (min, max) order."""
    inv_n = 1.0 / n
    cap = out_u.shape[0]
    cnt = 0
    m = right.shape[0]
    for i in range(i0, i1):
        u = left[i]
        for j in range(m):
            v = right[j]
            if _pair_test(pos, w, u, v, n, ncoords, dim, geom, volmode, c, inv_alpha, inv_n, base1, base2, ymode):
                if cnt < cap:
                    if u < v:
                        out_u[cnt] = u
                        out_v[cnt] = v
                    else:
                        out_u[cnt] = v
                        out_v[cnt] = u
                cnt += 1
    return cnt

"""Balanced-cut semantics and the separator searchers.

A (delta, eta)-cut of a target vertex set splits it into two sides of size at
least delta*n each (n = total vertex count, not target size) with at most
eta*n cross-edges.  The searchers here provide upper bounds on the minimum
balanced cut: an axis-parallel torus-slab sweep, an axis-aligned box sweep
(d=2), a Kernighan-Lin style local search (also usable to polish a geometric
cut), and an exact enumeration oracle for tiny targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .graph import GirgGraph
from .streams import Role, stream_base, uniforms_at

__all__ = [
    "Bipartition",
    "CutResult",
    "DestroyEntry",
    "DestroyReport",
    "cross_edges",
    "geometric_halfspace_cut",
    "geometric_box_cut",
    "local_search_cut",
    "refine_cut",
    "brute_force_min_cut",
    "destroy_check",
]

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Bipartition:
    """Side assignment over a target vertex set (vertices sorted ascending,
    side 0/1 aligned with them); both sides nonempty."""

    vertices: np.ndarray
    side: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=np.int64)
        s = np.asarray(self.side, dtype=np.uint8)
        if v.ndim != 1 or s.shape != v.shape:
            raise ValueError("vertices and side must be aligned 1-d arrays")
        if v.size >= 2 and np.any(np.diff(v) <= 0):
            raise ValueError("vertices must be strictly ascending")
        if np.any(s > 1):
            raise ValueError("side entries must be 0 or 1")
        n1 = int(s.sum())
        if n1 == 0 or n1 == s.size:
            raise ValueError("both sides of a bipartition must be nonempty")
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "side", s)

    @property
    def sizes(self) -> tuple[int, int]:
        n1 = int(self.side.sum())
        return self.side.size - n1, n1


@dataclass(frozen=True)
class CutResult:
    bipartition: Bipartition
    cross_edge_count: int
    method: str
    delta: float
    eta_achieved: float  # cross_edge_count / n
    feasible: bool  # both sides >= delta * n


def cross_edges(g: GirgGraph, b: Bipartition) -> int:
    """Exact count of graph edges with endpoints on opposite sides.  Edges
    with an endpoint outside the bipartition's target set do not count."""
    side_full = np.full(g.n, -1, dtype=np.int8)
    side_full[b.vertices] = b.side
    ea = g.edge_array()
    if ea.size == 0:
        return 0
    su = side_full[ea[:, 0]]
    sv = side_full[ea[:, 1]]
    return int(np.count_nonzero((su >= 0) & (sv >= 0) & (su != sv)))


def _result(g, vertices, side, method, delta, recount=True, cross=None) -> CutResult:
    bip = Bipartition(vertices=vertices, side=side)
    cnt = cross_edges(g, bip) if recount else int(cross)
    min_side = delta * g.n
    s0, s1 = bip.sizes
    return CutResult(
        bipartition=bip,
        cross_edge_count=cnt,
        method=method,
        delta=float(delta),
        eta_achieved=cnt / g.n,
        feasible=bool(s0 >= min_side and s1 >= min_side),
    )


def _giant_subgraph(g: GirgGraph, giant: np.ndarray):
    """CSR of the induced subgraph on the (sorted) target set, local ids."""
    m = giant.size
    local = np.full(g.n, -1, dtype=np.int64)
    local[giant] = np.arange(m)
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    dst = g.indices.astype(np.int64)
    keep = (local[src] >= 0) & (local[dst] >= 0)
    lsrc = local[src[keep]]
    ldst = local[dst[keep]]
    order = np.lexsort((ldst, lsrc))
    lsrc, ldst = lsrc[order], ldst[order]
    gptr = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(np.bincount(lsrc, minlength=m), out=gptr[1:])
    return gptr, ldst.astype(np.int32)


# ---------------------------------------------------------------------------
# axis-parallel slab sweep
# ---------------------------------------------------------------------------


def geometric_halfspace_cut(
    g: GirgGraph, giant: np.ndarray, axis: int, delta: float, max_positions: int = 1024
) -> CutResult:
    """Sweep pairs of parallel axis-aligned torus hyperplanes along ``axis``
    and return the feasible slab bipartition with the fewest cross-edges.

    Cut positions sit at target-vertex coordinate values (the optimum within
    the slab family lies there); when the target has more distinct values
    than ``max_positions``, an evenly spaced quantile subset of them is swept.
    """
    giant = np.asarray(giant, dtype=np.int64)
    if giant.size < 2:
        raise ValueError("target set must contain at least 2 vertices")
    if not (0.0 < delta < 0.5):
        raise ValueError("delta must lie in (0, 1/2)")
    coords = g.positions[giant, axis]
    if np.any(~np.isfinite(coords)):
        raise ValueError(f"axis {axis} has unrevealed coordinates in the target set")

    cand = np.unique(coords)
    if cand.size > max_positions:
        take = np.unique(np.round(np.linspace(0, cand.size - 1, max_positions)).astype(np.int64))
        cand = cand[take]
    C = cand.size

    # vertex counts: s[k] = #coords < cand[k]; slab [cand_i, cand_j) holds s[j]-s[i]
    sorted_coords = np.sort(coords)
    s = np.searchsorted(sorted_coords, cand, side="left").astype(np.int64)

    # giant-internal edges as (lo, hi) coordinate pairs
    gptr, gidx = _giant_subgraph(g, giant)
    lsrc = np.repeat(np.arange(giant.size, dtype=np.int64), np.diff(gptr))
    ldst = gidx.astype(np.int64)
    keep = lsrc < ldst
    cu = coords[lsrc[keep]]
    cv = coords[ldst[keep]]
    lo = np.minimum(cu, cv)
    hi = np.maximum(cu, cv)
    E = lo.size

    # bin edges by (rightmost candidate <= lo, first candidate > hi)
    lo_bin = np.searchsorted(cand, lo, side="right") - 1
    hb = np.searchsorted(cand, hi, side="right")
    H = np.zeros((C, C + 1), dtype=np.int64)
    np.add.at(H, (lo_bin, hb), 1)

    # slab [cand_i, cand_j): an edge is interior iff lo >= cand_i and
    # hi < cand_j, i.e. lo_bin >= i and hb <= j; both-out splits into
    # "both below i", "both at or above j", and "stranded" (one below, one
    # at or above)
    suff_lo = np.flip(np.cumsum(np.flip(H, axis=0), axis=0), axis=0)  # sum over a >= i
    both_in = np.cumsum(suff_lo, axis=1)[:, :-1]  # then b <= j; drop b index C
    pref_lo = np.cumsum(H, axis=0)
    tail_hb = np.flip(np.cumsum(np.flip(pref_lo, axis=1), axis=1), axis=1)
    stranded = np.zeros((C, C), dtype=np.int64)
    stranded[1:, :] = tail_hb[: C - 1, 1:]  # a <= i-1, b >= j+1
    below = np.cumsum(H.sum(axis=0))[:C]  # below[i] = #{hb <= i}
    above = np.flip(np.cumsum(np.flip(H.sum(axis=1))))  # above[j] = #{lo_bin >= j}

    cross = E - both_in - (below[:, None] + above[None, :] + stranded)
    upper = np.arange(C)[:, None] < np.arange(C)[None, :]  # i < j
    size_in = s[None, :] - s[:, None]
    min_side = delta * g.n
    feasible = upper & (size_in >= min_side) & ((giant.size - size_in) >= min_side)
    method = f"halfspace_axis{axis}"
    if not upper.any():
        raise ValueError("all target coordinates coincide on this axis; no slab exists")
    # every i < j slab contains cand_i and excludes the largest coordinate,
    # so both sides are nonempty even when the balance floor is unattainable
    pick = feasible if feasible.any() else upper
    masked = np.where(pick, cross, np.iinfo(np.int64).max)
    flat = int(np.argmin(masked))
    i, j = divmod(flat, C)
    side = ((coords >= cand[i]) & (coords < cand[j])).astype(np.uint8)
    return _result(g, giant, side, method, delta)


def geometric_box_cut(
    g: GirgGraph, giant: np.ndarray, delta: float, grid: int = 24
) -> CutResult:
    """Best axis-aligned rectangle bipartition in d=2: one side is a box
    [a1,b1) x [a2,b2) with corners on a per-axis quantile grid of the target
    coordinates.

    Exact within the grid: cross(box) = (degree mass on box vertices)
    - 2 * (edges with both endpoints inside), the latter counted through a
    4-d dominance prefix over per-axis (lo, hi) edge bins.  Wrapping boxes
    are not enumerated.
    """
    giant = np.asarray(giant, dtype=np.int64)
    if g.dimension != 2:
        raise ValueError("the box sweep is implemented for d = 2")
    if giant.size < 2:
        raise ValueError("target set must contain at least 2 vertices")
    pos = g.positions[giant]
    if np.any(~np.isfinite(pos)):
        raise ValueError("the target set has unrevealed coordinates")

    def axis_candidates(c):
        cand = np.unique(c)
        if cand.size > grid:
            take = np.unique(np.round(np.linspace(0, cand.size - 1, grid)).astype(np.int64))
            cand = cand[take]
        return cand

    cand1 = axis_candidates(pos[:, 0])
    cand2 = axis_candidates(pos[:, 1])
    c1, c2 = cand1.size, cand2.size
    if c1 < 2 or c2 < 2:
        raise ValueError("all target coordinates coincide; no box exists")

    bin1 = np.searchsorted(cand1, pos[:, 0], side="right") - 1
    bin2 = np.searchsorted(cand2, pos[:, 1], side="right") - 1
    gptr, gidx = _giant_subgraph(g, giant)
    deg = np.diff(gptr)

    # vertex-count and degree-mass prefixes; P[i,j] sums bins < (i, j)
    def prefix2(wts):
        h = np.zeros((c1 + 1, c2 + 1), dtype=np.int64)
        np.add.at(h, (bin1 + 1, bin2 + 1), wts)
        return h.cumsum(axis=0).cumsum(axis=1)

    vert_p = prefix2(np.ones(giant.size, dtype=np.int64))
    degm_p = prefix2(deg)

    lsrc = np.repeat(np.arange(giant.size, dtype=np.int64), deg)
    keep = lsrc < gidx
    eu, ev = lsrc[keep], gidx[keep].astype(np.int64)
    E = eu.size
    lo1 = np.minimum(bin1[eu], bin1[ev])
    hb1 = np.maximum(bin1[eu], bin1[ev]) + 1  # first grid index beyond hi
    lo2 = np.minimum(bin2[eu], bin2[ev])
    hb2 = np.maximum(bin2[eu], bin2[ev]) + 1
    H = np.zeros((c1, c1 + 1, c2, c2 + 1), dtype=np.int32)
    np.add.at(H, (lo1, hb1, lo2, hb2), 1)
    # both_in(i1,j1,i2,j2) = #{lo1 >= i1, hb1 <= j1, lo2 >= i2, hb2 <= j2}
    both = np.flip(np.cumsum(np.flip(H, 0), 0), 0)
    both = np.cumsum(both, 1)
    both = np.flip(np.cumsum(np.flip(both, 2), 2), 2)
    both = np.cumsum(both, 3)

    i1 = np.arange(c1)
    i2 = np.arange(c2)
    # rectangle sums broadcast over all corner pairs; memory c1^2*c2^2 <= grid^4
    vin = (
        vert_p[i1[None, :, None, None], i2[None, None, None, :]]
        - vert_p[i1[:, None, None, None], i2[None, None, None, :]]
        - vert_p[i1[None, :, None, None], i2[None, None, :, None]]
        + vert_p[i1[:, None, None, None], i2[None, None, :, None]]
    )
    dm = (
        degm_p[i1[None, :, None, None], i2[None, None, None, :]]
        - degm_p[i1[:, None, None, None], i2[None, None, None, :]]
        - degm_p[i1[None, :, None, None], i2[None, None, :, None]]
        + degm_p[i1[:, None, None, None], i2[None, None, :, None]]
    )
    cross = dm - 2 * both[i1[:, None, None, None], i1[None, :, None, None], i2[None, None, :, None], i2[None, None, None, :]]

    min_side = delta * g.n
    valid = (i1[:, None, None, None] < i1[None, :, None, None]) & (
        i2[None, None, :, None] < i2[None, None, None, :]
    )
    feasible = valid & (vin >= min_side) & ((giant.size - vin) >= min_side)
    nontrivial = valid & (vin >= 1) & ((giant.size - vin) >= 1)
    if not nontrivial.any():
        raise ValueError("no nontrivial box exists on this grid")
    pick = feasible if feasible.any() else nontrivial
    masked = np.where(pick, cross, np.iinfo(np.int64).max)
    flat = int(np.argmin(masked))
    a1, b1, a2, b2 = np.unravel_index(flat, masked.shape)
    side = (
        (pos[:, 0] >= cand1[a1]) & (pos[:, 0] < cand1[b1])
        & (pos[:, 1] >= cand2[a2]) & (pos[:, 1] < cand2[b2])
    ).astype(np.uint8)
    return _result(g, giant, side, "box", delta)


# ---------------------------------------------------------------------------
# Kernighan-Lin style local search
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _pack(gain, v):
    # order by gain desc, then vertex id asc
    return (gain << np.int64(32)) | np.int64(0x7FFFFFFF - v)


@njit(cache=True)
def _heap_push(hkey, hval, size, key, v):
    i = size
    hkey[i] = key
    hval[i] = v
    while i > 0:
        p = (i - 1) >> 1
        if hkey[p] >= hkey[i]:
            break
        hkey[p], hkey[i] = hkey[i], hkey[p]
        hval[p], hval[i] = hval[i], hval[p]
        i = p
    return size + 1


@njit(cache=True)
def _heap_pop(hkey, hval, size):
    top_key = hkey[0]
    top_val = hval[0]
    size -= 1
    hkey[0] = hkey[size]
    hval[0] = hval[size]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        big = i
        if l < size and hkey[l] > hkey[big]:
            big = l
        if r < size and hkey[r] > hkey[big]:
            big = r
        if big == i:
            break
        hkey[big], hkey[i] = hkey[i], hkey[big]
        hval[big], hval[i] = hval[i], hval[big]
        i = big
    return top_key, top_val, size


@njit(cache=True)
def _recompute_cross(gptr, gidx, side, cross_deg):
    m = side.shape[0]
    cut2 = 0
    for v in range(m):
        c = 0
        for k in range(gptr[v], gptr[v + 1]):
            if side[gidx[k]] != side[v]:
                c += 1
        cross_deg[v] = c
        cut2 += c
    return cut2 // 2


@njit(cache=True)
def _kl_refine(gptr, gidx, side, min_side, pass_limit):
    """Refine one side assignment in place; returns its final cut value.

    Each pass repeatedly moves the unlocked boundary vertex with the best
    gain (ties to the lowest id) subject to both sides keeping at least
    min_side vertices, then rolls back to the best prefix of the move
    sequence.  Passes stop when one yields no improvement.
    """
    m = side.shape[0]
    deg = np.empty(m, dtype=np.int64)
    for v in range(m):
        deg[v] = gptr[v + 1] - gptr[v]
    cross_deg = np.empty(m, dtype=np.int64)
    cut = _recompute_cross(gptr, gidx, side, cross_deg)

    # lazy heap: stale entries are filtered on pop; when the buffer fills it
    # is compacted down to one live entry per candidate vertex
    cap = min(2 * m + 2 * gidx.shape[0], 4 * m + (1 << 20)) + 64
    hkey = np.empty(cap, dtype=np.int64)
    hval = np.empty(cap, dtype=np.int64)
    stash_key = np.empty(m + 1, dtype=np.int64)
    stash_val = np.empty(m + 1, dtype=np.int64)
    stashed = np.zeros(m, dtype=np.uint8)
    locked = np.zeros(m, dtype=np.uint8)
    moves = np.empty(m, dtype=np.int64)

    size0 = 0
    for v in range(m):
        if side[v] == 0:
            size0 += 1

    for _ in range(pass_limit):
        pass_start_cut = cut
        locked[:] = 0
        stashed[:] = 0
        hsize = 0
        for v in range(m):
            if cross_deg[v] > 0:
                hsize = _heap_push(hkey, hval, hsize, _pack(2 * cross_deg[v] - deg[v], v), v)
        nmoves = 0
        best_cut = cut
        best_t = 0
        nstash = 0
        while hsize > 0:
            key, v, hsize = _heap_pop(hkey, hval, hsize)
            if locked[v] == 1 or cross_deg[v] == 0:
                continue
            gain = 2 * cross_deg[v] - deg[v]
            if key != _pack(gain, v):
                continue  # stale entry
            s = side[v]
            cur = size0 if s == 0 else m - size0
            if cur - 1 < min_side:
                if stashed[v] == 0:  # balance-blocked; retry after the next move
                    stashed[v] = 1
                    stash_key[nstash] = key
                    stash_val[nstash] = v
                    nstash += 1
                continue
            # apply the move
            side[v] = 1 - s
            size0 += 1 if s == 1 else -1
            locked[v] = 1
            cut += deg[v] - 2 * cross_deg[v]
            cross_deg[v] = deg[v] - cross_deg[v]
            for k in range(gptr[v], gptr[v + 1]):
                u = gidx[k]
                if side[u] == s:
                    cross_deg[u] += 1
                else:
                    cross_deg[u] -= 1
                if locked[u] == 0 and cross_deg[u] > 0:
                    if hsize >= cap:
                        hsize = _compact(hkey, hval, locked, cross_deg, deg, m)
                    hsize = _heap_push(hkey, hval, hsize, _pack(2 * cross_deg[u] - deg[u], u), u)
            moves[nmoves] = v
            nmoves += 1
            if cut < best_cut:
                best_cut = cut
                best_t = nmoves
            # blocked vertices may have become movable
            for t in range(nstash):
                if hsize >= cap:
                    hsize = _compact(hkey, hval, locked, cross_deg, deg, m)
                hsize = _heap_push(hkey, hval, hsize, stash_key[t], stash_val[t])
                stashed[stash_val[t]] = 0
            nstash = 0
        # roll back to the best prefix
        for t in range(nmoves - 1, best_t - 1, -1):
            v = moves[t]
            s = side[v]
            side[v] = 1 - s
            size0 += 1 if s == 1 else -1
        cut = _recompute_cross(gptr, gidx, side, cross_deg)
        if cut >= pass_start_cut:
            break
    return cut


@njit(cache=True)
def _compact(hkey, hval, locked, cross_deg, deg, m):
    size = 0
    for v in range(m):
        if locked[v] == 0 and cross_deg[v] > 0:
            size = _heap_push(hkey, hval, size, _pack(2 * cross_deg[v] - deg[v], v), v)
    return size


def local_search_cut(
    g: GirgGraph,
    giant: np.ndarray,
    delta: float,
    restarts: int = 10,
    seed: int = 0,
    pass_limit: int = 50,
) -> CutResult:
    """Kernighan-Lin style balanced min-cut search over the target set.

    Starts each restart from a seeded random balanced split and keeps the
    best state seen anywhere.  Deterministic given the seed; never errors,
    but flags the result infeasible when delta is unattainable, in which case
    the balance floor is dropped to 1.
    """
    giant = np.asarray(giant, dtype=np.int64)
    m = giant.size
    if m < 2:
        raise ValueError("target set must contain at least 2 vertices")
    gptr, gidx = _giant_subgraph(g, giant)
    min_side = int(np.ceil(delta * g.n))
    attainable = 2 * min_side <= m
    eff_min_side = min_side if attainable else 1

    base = stream_base(seed, Role.CUT_SEARCH)
    best_side: Optional[np.ndarray] = None
    best_cut = np.iinfo(np.int64).max
    half = m // 2
    for rs in range(max(1, restarts)):
        u = uniforms_at(base, np.arange(rs * m, (rs + 1) * m, dtype=np.uint64))
        perm = np.argsort(u, kind="stable")
        side = np.zeros(m, dtype=np.uint8)
        side[perm[half:]] = 1
        cut = int(_kl_refine(gptr, gidx, side, eff_min_side, pass_limit))
        if cut < best_cut:
            best_cut = cut
            best_side = side.copy()
    res = _result(g, giant, best_side, "local_search", delta)
    if not attainable:
        res = CutResult(
            bipartition=res.bipartition,
            cross_edge_count=res.cross_edge_count,
            method=res.method,
            delta=res.delta,
            eta_achieved=res.eta_achieved,
            feasible=False,
        )
    return res


def refine_cut(g: GirgGraph, base: CutResult, pass_limit: int = 50) -> CutResult:
    """Polish an existing feasible cut with the local-search passes, keeping
    its balance floor; never returns a worse cut."""
    giant = base.bipartition.vertices
    gptr, gidx = _giant_subgraph(g, giant)
    min_side = int(np.ceil(base.delta * g.n))
    side = base.bipartition.side.copy()
    _kl_refine(gptr, gidx, side, min_side, pass_limit)
    refined = _result(g, giant, side, base.method + "+refine", base.delta)
    return refined if refined.cross_edge_count < base.cross_edge_count else base


# ---------------------------------------------------------------------------
# exact oracle
# ---------------------------------------------------------------------------


def brute_force_min_cut(g: GirgGraph, giant: np.ndarray, delta: float) -> CutResult:
    """Exact minimum balanced cut by enumerating all 2^(m-1) bipartitions of
    the target set; limited to m <= 20 vertices."""
    giant = np.asarray(giant, dtype=np.int64)
    m = giant.size
    if m < 2:
        raise ValueError("target set must contain at least 2 vertices")
    if m > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {m}")
    gptr, gidx = _giant_subgraph(g, giant)
    lsrc = np.repeat(np.arange(m, dtype=np.int64), np.diff(gptr))
    keep = lsrc < gidx
    eu = lsrc[keep]
    ev = gidx[keep].astype(np.int64)

    # vertex 0 pinned to side 0; bits of the mask give the sides of 1..m-1
    masks = np.arange(1 << (m - 1), dtype=np.uint32)
    bits = ((masks[:, None] >> np.arange(m - 1, dtype=np.uint32)[None, :]) & 1).astype(np.uint8)
    side_of = np.concatenate([np.zeros((masks.size, 1), dtype=np.uint8), bits], axis=1)
    cross = np.zeros(masks.size, dtype=np.int32)
    for a, b in zip(eu, ev):
        cross += side_of[:, a] ^ side_of[:, b]
    ones = side_of.sum(axis=1).astype(np.int64)
    nonempty = (ones >= 1) & (ones <= m - 1)
    min_side = delta * g.n
    feasible = nonempty & (ones >= min_side) & ((m - ones) >= min_side)
    pool = feasible if feasible.any() else nonempty
    masked = np.where(pool, cross, np.iinfo(np.int32).max)
    best = int(np.argmin(masked))
    return _result(g, giant, side_of[best], "brute_force", delta)


# ---------------------------------------------------------------------------
# phase-6 cut destruction check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DestroyEntry:
    method: str
    cross_g3: int
    cross_g4: int
    inflation: float
    below_eta: bool  # cross_g3 <= eta * n


@dataclass(frozen=True)
class DestroyReport:
    delta: float
    eta: float
    k3_size: int
    entries: tuple


def destroy_check(trace, delta: float, eta: float, restarts: int = 10, seed: int = 0) -> DestroyReport:
    """Find the best cuts of the g3 giant (the component containing the
    phase-1 giant) with both heuristics, recount each in g4, and report the
    cross-edge inflation.

    Slab sweeps run on the leading d-1 axes only, since members of F have no
    revealed last coordinate in g3.
    """
    from .graphstats import connected_components

    g3, g4 = trace.g3, trace.g4
    lab = connected_components(g3)
    k3_label = lab.labels[trace.giant1[0]]
    k3 = np.flatnonzero(lab.labels == k3_label).astype(np.int64)

    cuts: list[CutResult] = []
    d = g3.dimension
    for axis in range(d - 1):
        try:
            cuts.append(geometric_halfspace_cut(g3, k3, axis, delta))
        except ValueError:
            pass
    cuts.append(local_search_cut(g3, k3, delta, restarts=restarts, seed=seed))

    entries = []
    for cut in cuts:
        c4 = cross_edges(g4, cut.bipartition)
        entries.append(
            DestroyEntry(
                method=cut.method,
                cross_g3=cut.cross_edge_count,
                cross_g4=c4,
                inflation=c4 / cut.cross_edge_count if cut.cross_edge_count else float("inf"),
                below_eta=bool(cut.cross_edge_count <= eta * g3.n),
            )
        )
    return DestroyReport(delta=float(delta), eta=float(eta), k3_size=int(k3.size), entries=tuple(entries))

"""Edge-probability kernel and the two graph samplers.

The edge probability is ``p_uv = c * min(1, (w_u w_v / (n V(dist)))^alpha)``
with a single prefactor c, so the lower-bound kernel evaluated at the true
minimum component distance coincides with p_uv exactly under the linearized
volume.  Edges are decided by ``min(Y1, Y2) < p_uv`` where Y1, Y2 are i.i.d.
with CDF ``1 - sqrt(1-c)``; the minimum of the two is then uniform on [0,1],
so this is distributionally the plain coin flip, but the split lets the
phased sampler commit to edges from partial coordinate information.

Both samplers draw every variate as a pure function of (seed, role, index):
positions and weights are keyed by vertex index, Y1/Y2 by the canonical pair
index.  The direct and the phased sampler therefore consume identical
randomness and must produce identical edge sets; `sample_coupled` returns
both for exact comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _pairscan as ps
from .geometry import MCD, GeometrySpec, mcd_geometry, volume
from .graph import GirgGraph
from .streams import Role, pair_index, stream_base, uniforms_at
from .weights import PowerLawParams, WeightSequence, weights_from_uniforms

__all__ = [
    "ModelParams",
    "PairRandomness",
    "PhasedTrace",
    "split_cdf",
    "split_inverse_cdf",
    "edge_probability",
    "p_lower",
    "pair_randomness",
    "pair_y_arrays",
    "model_positions",
    "model_weights",
    "sample_direct",
    "sample_phased",
    "sample_coupled",
]

# pairs per kernel invocation; bounds the size of temporary edge buffers
_CHUNK_PAIRS = 1 << 26


@dataclass(frozen=True)
class ModelParams:
    """Full description of one GIRG instance."""

    d: int
    n: int
    alpha: float
    beta: float
    prefactor_c: float = 1.0
    geometry: Optional[GeometrySpec] = None
    weight_params: Optional[PowerLawParams] = None
    seed: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not self.alpha > 1.0:
            raise ValueError("alpha must be > 1")
        if not (2.0 < self.beta < 3.0):
            raise ValueError("beta must lie in (2, 3)")
        if not (0.0 < self.prefactor_c <= 1.0):
            raise ValueError("prefactor_c must lie in (0, 1]")
        if self.geometry is None:
            object.__setattr__(self, "geometry", mcd_geometry(self.d))
        if self.geometry.dimension != self.d:
            raise ValueError("geometry dimension must equal d")
        if self.weight_params is None:
            object.__setattr__(self, "weight_params", PowerLawParams(beta=self.beta))
        if self.weight_params.beta != self.beta:
            raise ValueError("weight_params.beta must equal beta")
        object.__setattr__(self, "seed", int(self.seed) & 0xFFFFFFFFFFFFFFFF)


@dataclass(frozen=True)
class PairRandomness:
    """The two split variates of one pair; min(y1, y2) is uniform."""

    y1: float
    y2: float


@dataclass(frozen=True)
class PhasedTrace:
    """Snapshots and bookkeeping of the six-phase sampler.

    Edge sets are nested: g1 within g2 within g3 within g4, and g4 equals the
    direct sampler's graph under shared randomness.  ``order`` is the vertex
    enumeration used for the step phases (V minus the phase-1 giant, then
    giant minus F, then F).
    """

    g1: GirgGraph
    giant1: np.ndarray
    f_set: np.ndarray
    g2: GirgGraph
    g3: GirgGraph
    g4: GirgGraph
    f_param: float
    b_prime: float
    order: np.ndarray
    s_observed: float


# ---------------------------------------------------------------------------
# splitting CDF and pointwise probability functions
# ---------------------------------------------------------------------------


def split_cdf(c):
    """P[Y < c] = 1 - sqrt(1 - c) for c in [0, 1]."""
    c = np.asarray(c, dtype=np.float64)
    out = 1.0 - np.sqrt(1.0 - c)
    return float(out) if out.ndim == 0 else out


def split_inverse_cdf(u):
    """Inverse of the splitting CDF: maps uniform u in [0,1) to Y = 1-(1-u)^2."""
    u = np.asarray(u, dtype=np.float64)
    out = u * (2.0 - u)
    return float(out) if out.ndim == 0 else out


def edge_probability(params: ModelParams, wu, wv, dist):
    """c * min(1, (w_u w_v / (n V(dist)))^alpha); equals c at distance 0."""
    v = np.asarray(volume(params.geometry, dist), dtype=np.float64)
    return _kernel_probability(params, wu, wv, v)


def p_lower(params: ModelParams, wu, wv, r):
    """The lower-bound kernel: edge_probability with linearized volume V(r)=r
    (uncapped, so the r -> infinity limit is 0).

    Monotone nonincreasing in r; coincides with edge_probability at the true
    minimum component distance when the model runs in linearized mode.
    """
    r = np.asarray(r, dtype=np.float64)
    if np.any(r < 0):
        raise ValueError("r must be >= 0")
    return _kernel_probability(params, wu, wv, r)


def _kernel_probability(params: ModelParams, wu, wv, vol):
    wu = np.asarray(wu, dtype=np.float64)
    wv = np.asarray(wv, dtype=np.float64)
    q = np.where(vol > 0.0, wu * wv / (params.n * np.where(vol > 0.0, vol, 1.0)), np.inf)
    p = params.prefactor_c * np.minimum(q, 1.0) ** params.alpha
    p = np.where(q >= 1.0, params.prefactor_c, p)
    return float(p) if p.ndim == 0 else p


def pair_y_arrays(params: ModelParams, us, vs) -> tuple[np.ndarray, np.ndarray]:
    """Y1, Y2 arrays for the given pairs, from the counter-based streams."""
    idx = np.asarray(pair_index(us, vs, params.n), dtype=np.uint64)
    u1 = uniforms_at(stream_base(params.seed, Role.PAIR_Y1), idx)
    u2 = uniforms_at(stream_base(params.seed, Role.PAIR_Y2), idx)
    return split_inverse_cdf(u1), split_inverse_cdf(u2)


def pair_randomness(params: ModelParams, u: int, v: int) -> PairRandomness:
    if u == v:
        raise ValueError("a pair needs two distinct vertices")
    y1, y2 = pair_y_arrays(params, np.array([u]), np.array([v]))
    return PairRandomness(y1=float(y1[0]), y2=float(y2[0]))


# ---------------------------------------------------------------------------
# model-level position / weight draws
# ---------------------------------------------------------------------------


def model_positions(params: ModelParams) -> np.ndarray:
    """The (n, d) position matrix; coordinate i of vertex v sits at stream
    position v*d + i of the POSITION role."""
    base = stream_base(params.seed, Role.POSITION)
    u = uniforms_at(base, np.arange(params.n * params.d, dtype=np.uint64))
    return u.reshape(params.n, params.d)


def model_weights(params: ModelParams) -> WeightSequence:
    base = stream_base(params.seed, Role.WEIGHT)
    u = uniforms_at(base, np.arange(params.n, dtype=np.uint64))
    return weights_from_uniforms(params.weight_params, u, params.n)


# ---------------------------------------------------------------------------
# kernel drivers
# ---------------------------------------------------------------------------


def _geom_codes(params: ModelParams) -> tuple[int, int]:
    geom = ps.GEOM_MCD if params.geometry.kind == MCD else ps.GEOM_EUCLIDEAN
    vol = ps.VOL_LINEARIZED if params.geometry.volume_mode == "linearized" else ps.VOL_EXACT
    return geom, vol


def _scan_chunked(run_chunk, starts_ends, est_edges: int) -> tuple[np.ndarray, np.ndarray]:
    """Drive a kernel over index chunks, growing buffers on overflow."""
    cap = max(1 << 16, est_edges)
    out_u = np.empty(cap, dtype=np.int32)
    out_v = np.empty(cap, dtype=np.int32)
    all_u, all_v = [], []
    for lo, hi in starts_ends:
        while True:
            cnt = run_chunk(lo, hi, out_u, out_v)
            if cnt <= out_u.shape[0]:
                break
            cap = cnt + 64
            out_u = np.empty(cap, dtype=np.int32)
            out_v = np.empty(cap, dtype=np.int32)
        all_u.append(out_u[:cnt].copy())
        all_v.append(out_v[:cnt].copy())
    if not all_u:
        e = np.empty(0, dtype=np.int32)
        return e, e
    return np.concatenate(all_u), np.concatenate(all_v)


def _row_chunks(n: int, u0: int = 0, u1: Optional[int] = None):
    """Split rows [u0, u1) so each chunk covers about _CHUNK_PAIRS pairs."""
    u1 = n if u1 is None else u1
    chunks = []
    lo = u0
    while lo < u1:
        hi = lo
        pairs = 0
        while hi < u1 and pairs < _CHUNK_PAIRS:
            pairs += n - 1 - hi
            hi += 1
        chunks.append((lo, hi))
        lo = hi
    return chunks


def _index_chunks(m: int, per_row: int):
    per = max(1, _CHUNK_PAIRS // max(per_row, 1))
    return [(i, min(i + per, m)) for i in range(0, m, per)]


def _scan_all_pairs(params, pos, w, ncoords, volmode, ymode, est_edges):
    geom, _ = _geom_codes(params)
    b1 = stream_base(params.seed, Role.PAIR_Y1)
    b2 = stream_base(params.seed, Role.PAIR_Y2)
    inv_alpha = 1.0 / params.alpha

    def run(lo, hi, out_u, out_v):
        return ps.scan_rows(
            pos, w, params.n, lo, hi, ncoords, params.d, geom, volmode,
            params.prefactor_c, inv_alpha, b1, b2, ymode, out_u, out_v,
        )

    return _scan_chunked(run, _row_chunks(params.n), est_edges)


def _scan_subset_within(params, pos, w, members, est_edges):
    geom, volmode = _geom_codes(params)
    b1 = stream_base(params.seed, Role.PAIR_Y1)
    b2 = stream_base(params.seed, Role.PAIR_Y2)
    inv_alpha = 1.0 / params.alpha

    def run(lo, hi, out_u, out_v):
        return ps.scan_within(
            pos, w, params.n, members, lo, hi, params.d, params.d, geom, volmode,
            params.prefactor_c, inv_alpha, b1, b2, ps.YMODE_MIN, out_u, out_v,
        )

    return _scan_chunked(run, _index_chunks(members.size, members.size), est_edges)


def _scan_subset_between(params, pos, w, left, right, est_edges):
    geom, volmode = _geom_codes(params)
    b1 = stream_base(params.seed, Role.PAIR_Y1)
    b2 = stream_base(params.seed, Role.PAIR_Y2)
    inv_alpha = 1.0 / params.alpha

    def run(lo, hi, out_u, out_v):
        return ps.scan_between(
            pos, w, params.n, left, lo, hi, right, params.d, params.d, geom, volmode,
            params.prefactor_c, inv_alpha, b1, b2, ps.YMODE_MIN, out_u, out_v,
        )

    return _scan_chunked(run, _index_chunks(left.size, right.size), est_edges)


def _estimate_edges(params: ModelParams) -> int:
    # crude mean-degree guess: saturation + integrated tail, enough for a
    # first buffer size (buffers grow on overflow anyway)
    mean_w = 3.0
    guess = 12.0 * params.prefactor_c * mean_w * mean_w * params.n
    return int(min(guess * 1.5 + 1024, 3e8))


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------


def sample_direct(params: ModelParams) -> GirgGraph:
    """The pairwise sampler: evaluate the edge insertion criterion for all
    C(n,2) pairs.  Deterministic given the seed, independent of chunking."""
    pos = model_positions(params)
    ws = model_weights(params)
    eu, ev = _scan_all_pairs(
        params, pos, ws.weights, params.d,
        _geom_codes(params)[1], ps.YMODE_MIN, _estimate_edges(params),
    )
    return GirgGraph.from_edges(params.n, ws.weights, pos, eu, ev)


def _masked_positions(pos: np.ndarray, revealed_last: np.ndarray) -> np.ndarray:
    """Copy of the position matrix with the last coordinate NaN-masked for
    vertices whose step has not run yet."""
    out = pos.copy()
    hidden = ~revealed_last
    out[hidden, -1] = np.nan
    return out


def _choose_b_prime(giant_weights: np.ndarray) -> float:
    """Smallest integer bound leaving at least half of the giant strictly
    below it."""
    k = giant_weights.size
    half_index = (k + 1) // 2 - 1  # the ceil(k/2)-th smallest, 0-based
    pivot = np.partition(giant_weights, half_index)[half_index]
    return float(np.floor(pivot) + 1.0)


def sample_phased(params: ModelParams, f: float) -> PhasedTrace:
    """The six-phase uncovering sampler for the mcd geometry, d >= 2.

    Phase 1 draws the leading d-1 coordinates and Y1 and inserts every edge
    whose Y1 already beats the lower-bound kernel on those coordinates (G1).
    Phase 2 picks the weight bound B' and samples the candidate set F' with
    inclusion probability min(1, 4f/s) among weight-< B' vertices, where s is
    the observed giant fraction of G1.  Phase 3 intersects F' with the giant
    and fixes the vertex enumeration.  Phases 4-6 reveal the last coordinate
    and Y2 group by group and insert every pair edge satisfying the full
    criterion, snapshotting G2, G3, G4 at the group boundaries.
    """
    from .graphstats import connected_components  # local import, no cycle at module load

    if params.geometry.kind != MCD:
        raise ValueError("the phased sampler is defined for the mcd geometry only")
    if params.d < 2:
        raise ValueError("the phased sampler needs d >= 2; for d = 1 the phase-1 criterion is undefined")
    if params.geometry.volume_mode != "linearized":
        raise ValueError("the phased sampler requires linearized volume mode")
    if not (0.0 <= f < 1.0):
        raise ValueError("f must lie in [0, 1)")

    n = params.n
    pos = model_positions(params)
    ws = model_weights(params)
    w = ws.weights
    est = _estimate_edges(params)

    # Phase 1: G1 from Y1 against the leading-coordinate lower bound
    g1u, g1v = _scan_all_pairs(params, pos, w, params.d - 1, ps.VOL_LINEARIZED, ps.YMODE_Y1, est)
    g1 = GirgGraph.from_edges(n, w, _masked_positions(pos, np.zeros(n, dtype=bool)), g1u, g1v)
    labeling = connected_components(g1)
    giant1 = np.flatnonzero(labeling.labels == labeling.giant_label).astype(np.int64)
    s_observed = giant1.size / n

    # Phase 2: weight bound and candidate set F'
    b_prime = _choose_b_prime(w[giant1])
    p_incl = min(1.0, 4.0 * f / s_observed) if f > 0 else 0.0
    sel = uniforms_at(stream_base(params.seed, Role.F_SELECT), np.arange(n, dtype=np.uint64))
    f_prime = np.flatnonzero((w < b_prime) & (sel < p_incl)).astype(np.int64)

    # Phase 3: F and the vertex enumeration
    in_giant = np.zeros(n, dtype=bool)
    in_giant[giant1] = True
    f_set = f_prime[in_giant[f_prime]]
    in_f = np.zeros(n, dtype=bool)
    in_f[f_set] = True
    outside = np.flatnonzero(~in_giant).astype(np.int64)
    giant_not_f = giant1[~in_f[giant1]]
    order = np.concatenate([outside, giant_not_f, f_set])

    g1_keys = g1u.astype(np.int64) * n + g1v.astype(np.int64)

    def snapshot(keys, revealed):
        ku = keys // n
        kv = keys % n
        return GirgGraph.from_edges(n, w, _masked_positions(pos, revealed), ku, kv)

    # Phase 4: pairs inside V \ K1 -> G2
    e4u, e4v = _scan_subset_within(params, pos, w, outside, est)
    keys = np.union1d(g1_keys, e4u.astype(np.int64) * n + e4v.astype(np.int64))
    revealed = np.zeros(n, dtype=bool)
    revealed[outside] = True
    g2 = snapshot(keys, revealed)

    # Phase 5: pairs inside K1 \ F and across to V \ K1 -> G3
    e5u, e5v = _scan_subset_within(params, pos, w, giant_not_f, est)
    keys = np.union1d(keys, e5u.astype(np.int64) * n + e5v.astype(np.int64))
    if giant_not_f.size and outside.size:
        e5xu, e5xv = _scan_subset_between(params, pos, w, giant_not_f, outside, est)
        keys = np.union1d(keys, e5xu.astype(np.int64) * n + e5xv.astype(np.int64))
    revealed[giant_not_f] = True
    g3 = snapshot(keys, revealed)

    # Phase 6: everything incident to F -> G4
    if f_set.size:
        e6u, e6v = _scan_subset_within(params, pos, w, f_set, est)
        keys = np.union1d(keys, e6u.astype(np.int64) * n + e6v.astype(np.int64))
        not_f = np.flatnonzero(~in_f).astype(np.int64)
        if not_f.size:
            e6xu, e6xv = _scan_subset_between(params, pos, w, f_set, not_f, est)
            keys = np.union1d(keys, e6xu.astype(np.int64) * n + e6xv.astype(np.int64))
    revealed[f_set] = True
    g4 = snapshot(keys, revealed)

    return PhasedTrace(
        g1=g1,
        giant1=giant1,
        f_set=f_set,
        g2=g2,
        g3=g3,
        g4=g4,
        f_param=float(f),
        b_prime=b_prime,
        order=order,
        s_observed=float(s_observed),
    )


def sample_coupled(params: ModelParams, f: float) -> tuple[GirgGraph, PhasedTrace]:
    """Run both samplers on the identical variate streams and return both.

    The direct edge set and the trace's g4 edge set must agree exactly; this
    is the implementation-level counterpart of exchanging the drawing order
    of positions and pair variates.
    """
    direct = sample_direct(params)
    trace = sample_phased(params, f)
    return direct, trace

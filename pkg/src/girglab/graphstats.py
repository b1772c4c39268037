"""Structural analyses: components, clustering, degree law, coordinate
occupancy, and the stochastic-triangle-inequality estimator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .geometry import EUCLIDEAN_MAX, GeometrySpec, exact_ball_volume, sample_in_ball_many
from .graph import GirgGraph
from .weights import fit_tail_exponent

__all__ = [
    "ComponentLabeling",
    "ClusteringReport",
    "OccupancyReport",
    "TriangleEstimate",
    "DegreeReport",
    "connected_components",
    "giant_vertices",
    "clustering_coefficient",
    "subinterval_occupancy",
    "stochastic_triangle_estimate",
    "degree_report",
]


@dataclass(frozen=True)
class ComponentLabeling:
    labels: np.ndarray  # (n,) component id per vertex
    sizes: np.ndarray  # component sizes sorted descending
    giant_label: int
    giant_size: int


@dataclass(frozen=True)
class ClusteringReport:
    per_vertex: np.ndarray  # cc(v) in [0,1]
    mean: float  # average over all n vertices
    low_degree_count: int  # vertices with degree < 2 (their cc is 0)


@dataclass(frozen=True)
class OccupancyReport:
    l: float
    num_bins: int  # M = ceil(n / l)
    histogram: np.ndarray
    top_bins: int  # ceil(r * n)
    top_rn_sum: int  # occupancy of the heaviest top_bins bins
    threshold: float  # delta * n / 2
    passes: bool  # top_rn_sum < threshold


@dataclass(frozen=True)
class TriangleEstimate:
    probability: float
    half_width: float
    volume_ratio: float  # exact V(eps) / V(C*eps)


@dataclass(frozen=True)
class DegreeReport:
    histogram: np.ndarray  # histogram[k] = number of vertices with degree k
    max_degree: int
    cutoff: float
    tail_exponent: Optional[float]  # None when the fit is rejected (no usable tail)
    tail_half_width: Optional[float]


def connected_components(g: GirgGraph) -> ComponentLabeling:
    """Label components; the giant is the largest one, ties broken by the
    smallest vertex id contained."""
    mat = csr_matrix(
        (np.ones(g.indices.size, dtype=np.int8), g.indices, g.indptr), shape=(g.n, g.n)
    )
    _, labels = _cc(mat, directed=False)
    sizes_by_label = np.bincount(labels)
    # first occurrence of each label = smallest vertex id in that component
    _, first_idx = np.unique(labels, return_index=True)
    order = np.lexsort((first_idx, -sizes_by_label))
    giant_label = int(order[0])
    return ComponentLabeling(
        labels=labels,
        sizes=np.sort(sizes_by_label)[::-1],
        giant_label=giant_label,
        giant_size=int(sizes_by_label[giant_label]),
    )


def giant_vertices(g: GirgGraph) -> np.ndarray:
    lab = connected_components(g)
    return np.flatnonzero(lab.labels == lab.giant_label).astype(np.int64)


@njit(cache=True)
def _triangle_counts(indptr, indices, n):
    tri2 = np.zeros(n, dtype=np.int64)  # twice the per-vertex triangle count
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if v <= u:
                continue
            # sorted-adjacency intersection of N(u) and N(v)
            i = indptr[u]
            j = indptr[v]
            iu = indptr[u + 1]
            jv = indptr[v + 1]
            common = 0
            while i < iu and j < jv:
                a = indices[i]
                b = indices[j]
                if a == b:
                    common += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
            # each common neighbor w closes a triangle {u, v, w}; that
            # triangle is met once per incident edge pair, so each vertex's
            # count accumulates to exactly twice its triangle number
            tri2[u] += common
            tri2[v] += common
    return tri2


def clustering_coefficient(g: GirgGraph) -> ClusteringReport:
    """Per-vertex clustering cc(v) = triangles(v) / C(deg(v), 2), zero for
    degree < 2; the graph value is the plain mean over all n vertices."""
    deg = g.degrees().astype(np.int64)
    tri2 = _triangle_counts(g.indptr, g.indices.astype(np.int64), g.n)
    cc = np.zeros(g.n, dtype=np.float64)
    ok = deg >= 2
    pairs = deg[ok] * (deg[ok] - 1)  # 2 * C(deg, 2)
    cc[ok] = tri2[ok] / pairs
    return ClusteringReport(
        per_vertex=cc,
        mean=float(cc.mean()) if g.n else 0.0,
        low_degree_count=int(np.count_nonzero(~ok)),
    )


def subinterval_occupancy(
    dth_coords, l: float, r: float, delta: float, n: int
) -> OccupancyReport:
    """Histogram the coordinates into M = ceil(n/l) equal subintervals of
    [0,1] and report the total occupancy of the ceil(r*n) heaviest bins
    against the threshold delta*n/2.

    The heaviest bins dominate every other choice of equally many bins, so
    this collapses the quantifier over all bin subsets exactly.
    """
    if not (0.0 < l < 1.0 or l == 1.0):
        # l is a constant in (0, 1]; 1 gives one bin per expected vertex
        raise ValueError("l must lie in (0, 1]")
    if not (0.0 < r < 1.0) or not (0.0 < delta < 1.0):
        raise ValueError("r and delta must lie in (0, 1)")
    coords = np.asarray(dth_coords, dtype=np.float64)
    m = int(np.ceil(n / l))
    top_bins = int(np.ceil(r * n))
    if top_bins > m:
        raise ValueError(f"ceil(r*n) = {top_bins} exceeds the number of bins M = {m}")
    bins = np.minimum((coords * m).astype(np.int64), m - 1)
    hist = np.bincount(bins, minlength=m)
    if top_bins > 0:
        top = np.partition(hist, m - top_bins)[m - top_bins :]
        top_sum = int(top.sum())
    else:
        top_sum = 0
    threshold = delta * n / 2.0
    return OccupancyReport(
        l=float(l),
        num_bins=m,
        histogram=hist,
        top_bins=top_bins,
        top_rn_sum=top_sum,
        threshold=threshold,
        passes=bool(top_sum < threshold),
    )


def stochastic_triangle_estimate(
    geom: GeometrySpec, eps: float, C: float, samples: int, rng: np.random.Generator
) -> TriangleEstimate:
    """Monte Carlo estimate of P[dist(x1, x2) <= C*eps] for x1, x2 uniform in
    the eps-ball around the origin, with a binomial 95% half-width.

    Also returns the exact-volume ratio V(eps)/V(C*eps), the quantity whose
    liminf the stochastic triangle inequality bounds away from zero.  The
    ball center is immaterial by translation invariance.
    """
    if samples < 1000:
        raise ValueError("use at least 1000 samples")
    center = np.zeros(geom.dimension)
    x1 = sample_in_ball_many(geom, center, eps, samples, rng)
    x2 = sample_in_ball_many(geom, center, eps, samples, rng)
    diffs = np.abs(x1 - x2)
    np.minimum(diffs, 1.0 - diffs, out=diffs)
    if geom.kind == EUCLIDEAN_MAX:
        dist = diffs.max(axis=1)
    else:
        dist = diffs.min(axis=1)
    p_hat = float(np.count_nonzero(dist <= C * eps)) / samples
    half = 1.96 * np.sqrt(max(p_hat * (1.0 - p_hat), 1e-12) / samples)
    ratio = exact_ball_volume(geom, eps) / exact_ball_volume(geom, C * eps)
    return TriangleEstimate(probability=p_hat, half_width=float(half), volume_ratio=float(ratio))


def degree_report(g: GirgGraph, cutoff: float = 8.0) -> DegreeReport:
    """Degree histogram plus a Hill fit of the degree CCDF exponent above the
    cutoff.  When the tail is too thin or degenerate the fit is rejected and
    the exponent fields are None."""
    deg = g.degrees().astype(np.int64)
    hist = np.bincount(deg, minlength=1)
    try:
        est, half = fit_tail_exponent(deg.astype(np.float64), cutoff)
    except ValueError:
        est, half = None, None
    return DegreeReport(
        histogram=hist,
        max_degree=int(deg.max()) if g.n else 0,
        cutoff=float(cutoff),
        tail_exponent=est,
        tail_half_width=half,
    )

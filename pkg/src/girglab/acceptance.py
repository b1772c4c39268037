"""The acceptance suite: ten checks covering sampler coupling, the splitting
CDF, the separator dichotomy, giant component and clustering stability, the
stochastic triangle inequality, the degree power law, cut-oracle soundness,
phase monotonicity, and the subinterval-occupancy diagnostic.

Each criterion returns a CriterionResult; `run_all` executes them in order
and prints one pass/fail line per criterion.  The separator sweep (shared by
three criteria) is computed once and cached.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cuts import brute_force_min_cut, destroy_check, geometric_halfspace_cut, local_search_cut
from .geometry import euclidean_geometry, mcd_geometry
from .graphstats import (
    degree_report,
    giant_vertices,
    stochastic_triangle_estimate,
    subinterval_occupancy,
)
from .harness import ExperimentConfig, ScalingRecord, fit_scaling_exponent, run_sweep
from .sampler import (
    ModelParams,
    sample_coupled,
    sample_direct,
    sample_phased,
    split_cdf,
    split_inverse_cdf,
)
from .streams import Role, stream_base, uniforms_range

__all__ = ["CriterionResult", "run_all", "CRITERIA", "sweep_records", "sweep_build_seconds"]

# shared sweep parameters (criteria 3-5): alpha=1.5, beta=2.5, c=1, delta=0.1,
# n = 2^12 .. 2^16, 5 seeds, both geometries in d=2
_SWEEP_NS = tuple(2**k for k in range(12, 17))
_SWEEP_SEEDS = (1, 2, 3, 4, 5)
_SWEEP_DELTA = 0.1
# searcher effort per geometry: the mcd side is linear-regime whatever the
# random-restart budget, and its dense graphs make restarts the dominant
# cost; the euclidean side keeps the budget that the slope was validated with
_SWEEP_RESTARTS = {"euclidean_max": 3, "mcd": 1}

# degree-law check (criterion 7): prefactor chosen so the degree scale stays
# near the weight scale and the power tail dominates above the cutoff of 8
_DEGREE_PREFACTOR = 0.2

_sweeps: dict[str, list[ScalingRecord]] = {}
_sweep_seconds: dict[str, float] = {}


def sweep_records(kind: str) -> list[ScalingRecord]:
    if kind not in _sweeps:
        config = ExperimentConfig(
            geometry_kind=kind,
            d=2,
            n_values=_SWEEP_NS,
            alpha=1.5,
            beta=2.5,
            prefactor_c=1.0,
            deltas=(_SWEEP_DELTA,),
            seeds=_SWEEP_SEEDS,
            restarts=_SWEEP_RESTARTS[kind],
        )
        t0 = time.perf_counter()
        _sweeps[kind] = run_sweep(config)
        _sweep_seconds[kind] = time.perf_counter() - t0
    return _sweeps[kind]


def sweep_build_seconds() -> float:
    return sum(_sweep_seconds.values())


@dataclass(frozen=True)
class CriterionResult:
    key: str
    name: str
    passed: bool
    detail: str
    seconds: float


def _mean_by_n(records, getter) -> dict[int, float]:
    by_n: dict[int, list[float]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(getter(r))
    return {n: float(np.mean(v)) for n, v in by_n.items()}


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def criterion_1_coupling() -> tuple[bool, str]:
    """Direct and phased samplers agree edge-for-edge on every seed."""
    t0 = time.perf_counter()
    checked = 0
    for n in (20, 50, 100, 200):
        for seed in range(100):
            params = ModelParams(d=2, n=n, alpha=1.5, beta=2.5, prefactor_c=1.0, seed=seed)
            direct, trace = sample_coupled(params, f=0.1)
            if not direct.same_edges(trace.g4):
                return False, f"edge sets differ at n={n}, seed={seed}"
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = elapsed < 60.0
    return ok, f"{checked} coupled runs identical; {elapsed:.1f}s (< 60s required)"


def criterion_2_splitting_cdf() -> tuple[bool, str]:
    """min(Y1,Y2) is uniform (KS < 0.005 over 1e6 draws) and the CDF
    round-trips to 1e-12 on a 1000-point grid."""
    m = 1_000_000
    u1 = uniforms_range(stream_base(7, Role.PAIR_Y1), 0, m)
    u2 = uniforms_range(stream_base(7, Role.PAIR_Y2), 0, m)
    ymin = np.minimum(split_inverse_cdf(u1), split_inverse_cdf(u2))
    s = np.sort(ymin)
    grid_hi = np.arange(1, m + 1) / m
    grid_lo = np.arange(0, m) / m
    ks = max(np.max(np.abs(s - grid_hi)), np.max(np.abs(s - grid_lo)))
    grid = np.arange(1000) / 1000.0
    rt = np.max(np.abs(split_cdf(split_inverse_cdf(grid)) - grid))
    ok = ks < 0.005 and rt <= 1e-12
    return ok, f"KS={ks:.5f} (<0.005), round-trip error={rt:.2e} (<=1e-12)"


def criterion_3_dichotomy() -> tuple[bool, str]:
    """Euclidean cuts scale sublinearly (slope <= 0.85); mcd cuts stay linear
    (slope >= 0.9 and eta does not collapse)."""
    eu = sweep_records("euclidean_max")
    mc = sweep_records("mcd")
    elapsed = sweep_build_seconds()
    slope_eu, hw_eu = fit_scaling_exponent(eu)
    slope_mc, hw_mc = fit_scaling_exponent(mc)
    eta = _mean_by_n(mc, lambda r: r.eta_achieved)
    eta_ratio = eta[2**16] / eta[2**12]
    ok = slope_eu <= 0.85 and slope_mc >= 0.9 and eta_ratio >= 0.5 and elapsed <= 1800.0
    return ok, (
        f"euclidean slope={slope_eu:.3f}±{hw_eu:.3f} (<=0.85), "
        f"mcd slope={slope_mc:.3f}±{hw_mc:.3f} (>=0.9), "
        f"mcd eta(2^16)/eta(2^12)={eta_ratio:.2f} (>=0.5), sweep {elapsed:.0f}s (<=1800s)"
    )


def criterion_4_giant() -> tuple[bool, str]:
    """mcd giant fraction is stable across n and bounded away from zero."""
    mc = sweep_records("mcd")
    gf = _mean_by_n(mc, lambda r: r.giant_fraction)
    base = gf[2**13]
    devs = {n: abs(gf[n] - base) / base for n in (2**13, 2**14, 2**15, 2**16)}
    worst = max(devs.values())
    small = min(gf[n] for n in (2**13, 2**14, 2**15, 2**16))
    ok = worst <= 0.30 and small > 0.05
    return ok, f"giant fraction {base:.3f} at 2^13, max relative deviation {worst:.3f} (<=0.30), min {small:.3f} (>0.05)"


def criterion_5_clustering() -> tuple[bool, str]:
    """Mean clustering does not vanish with n for either geometry."""
    parts = []
    ok = True
    for kind in ("euclidean_max", "mcd"):
        cc = _mean_by_n(sweep_records(kind), lambda r: r.mean_cc)
        ratio = cc[2**16] / cc[2**12]
        ok = ok and ratio >= 0.5 and cc[2**16] > 0.01
        parts.append(f"{kind}: cc(2^16)={cc[2**16]:.3f}, ratio={ratio:.2f}")
    return ok, "; ".join(parts) + " (ratios >=0.5, cc >0.01)"


def criterion_6_triangle() -> tuple[bool, str]:
    """Stochastic triangle inequality: mcd estimate >= 1/d - 0.02 at C=2,
    exact 1.0 for the max norm; volume ratios match the closed form."""
    parts = []
    ok = True
    eps = 0.005
    for d in (2, 3):
        est = stochastic_triangle_estimate(
            mcd_geometry(d), eps, 2.0, 100_000, np.random.default_rng(42 + d)
        )
        closed = (1 - (1 - 2 * eps) ** d) / (1 - (1 - 4 * eps) ** d)
        vol_ok = abs(est.volume_ratio - closed) <= 0.01
        ok = ok and est.probability >= 1.0 / d - 0.02 and vol_ok
        parts.append(f"mcd d={d}: p={est.probability:.3f} (>= {1/d - 0.02:.3f}), ratio err {abs(est.volume_ratio - closed):.1e}")
    est = stochastic_triangle_estimate(
        euclidean_geometry(2), 0.05, 2.0, 100_000, np.random.default_rng(41)
    )
    ok = ok and est.probability == 1.0
    parts.append(f"euclidean_max: p={est.probability} (== 1.0)")
    return ok, "; ".join(parts)


def criterion_7_degree_law() -> tuple[bool, str]:
    """Degree CCDF exponent above 8 matches the weight exponent beta-1=1.5."""
    params = ModelParams(
        d=2, n=2**16, alpha=1.5, beta=2.5, prefactor_c=_DEGREE_PREFACTOR, seed=11
    )
    g = sample_direct(params)
    rep = degree_report(g, cutoff=8.0)
    if rep.tail_exponent is None:
        return False, "degree tail fit rejected"
    ok = abs(rep.tail_exponent - 1.5) <= 0.3
    return ok, f"exponent {rep.tail_exponent:.3f}±{rep.tail_half_width:.3f} vs 1.5±0.3 (c={_DEGREE_PREFACTOR})"


def _small_instances(count: int = 100):
    """First `count` seeds whose sampled giant has 4..16 vertices."""
    instances = []
    seed = 0
    while len(instances) < count and seed < 5000:
        params = ModelParams(
            d=2, n=24, alpha=1.5, beta=2.5, prefactor_c=0.05, seed=10_000 + seed
        )
        g = sample_direct(params)
        giant = giant_vertices(g)
        if 4 <= giant.size <= 16:
            instances.append((g, giant))
        seed += 1
    return instances


def criterion_8_oracle() -> tuple[bool, str]:
    """Heuristics never beat the exact oracle and the local search hits the
    optimum on at least 80 of 100 tiny instances."""
    delta = 0.05
    instances = _small_instances(100)
    if len(instances) < 100:
        return False, f"only {len(instances)} suitable instances found"
    sound = True
    hits = 0
    for g, giant in instances:
        exact = brute_force_min_cut(g, giant, delta)
        ls = local_search_cut(g, giant, delta, restarts=10, seed=1)
        if ls.cross_edge_count < exact.cross_edge_count:
            sound = False
        if ls.cross_edge_count == exact.cross_edge_count:
            hits += 1
        for axis in range(2):
            try:
                hs = geometric_halfspace_cut(g, giant, axis, delta)
            except ValueError:
                continue
            if hs.feasible and hs.cross_edge_count < exact.cross_edge_count:
                sound = False
    ok = sound and hits >= 80
    return ok, f"oracle never beaten: {sound}; local search optimal on {hits}/100 (>=80)"


def criterion_9_phases() -> tuple[bool, str]:
    """g1 edges survive to g4; f=0 leaves g3 = g4; with f=0.02 every sparse
    g3 cut gains cross-edges in g4 on >= 95% of seeds."""
    # f = 0: phase 6 is a no-op
    params0 = ModelParams(d=2, n=2**12, alpha=1.5, beta=2.5, prefactor_c=1.0, seed=3)
    tr0 = sample_phased(params0, f=0.0)
    if not tr0.g3.same_edges(tr0.g4):
        return False, "f=0 but g3 != g4"
    giant0 = giant_vertices(tr0.g3)
    c3 = local_search_cut(tr0.g3, giant0, _SWEEP_DELTA, restarts=2, seed=5)
    c4 = local_search_cut(tr0.g4, giant0, _SWEEP_DELTA, restarts=2, seed=5)
    if c3.cross_edge_count != c4.cross_edge_count:
        return False, "f=0 best cuts differ between g3 and g4"

    eta = _mean_by_n(sweep_records("mcd"), lambda r: r.eta_achieved)[2**14]
    good = 0
    nested = True
    sparse_total = 0
    for seed in range(20):
        params = ModelParams(d=2, n=2**14, alpha=1.5, beta=2.5, prefactor_c=1.0, seed=200 + seed)
        trace = sample_phased(params, f=0.02)
        e1 = trace.g1.edge_array()
        k1 = e1[:, 0] * params.n + e1[:, 1]
        e4 = trace.g4.edge_array()
        k4 = e4[:, 0] * params.n + e4[:, 1]
        if not np.all(np.isin(k1, k4)):
            nested = False
        rep = destroy_check(trace, _SWEEP_DELTA, eta, restarts=2, seed=seed)
        sparse = [e for e in rep.entries if e.below_eta]
        sparse_total += len(sparse)
        if all(e.cross_g4 > e.cross_g3 for e in sparse):
            good += 1
    ok = nested and good >= 19
    return ok, (
        f"g1 within g4 on all seeds: {nested}; f=0 no-op verified; "
        f"sparse g3 cuts gained edges on {good}/20 seeds (>=19; {sparse_total} sparse cuts checked)"
    )


def criterion_10_occupancy() -> tuple[bool, str]:
    """Uniform coordinates never concentrate in the heaviest 1% of bins."""
    passes = 0
    for seed in range(100):
        coords = np.random.default_rng(seed).random(100_000)
        rep = subinterval_occupancy(coords, l=1.0, r=0.01, delta=0.1, n=100_000)
        passes += int(rep.passes)
    return passes == 100, f"occupancy below threshold in {passes}/100 trials (need 100)"


CRITERIA: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = [
    ("C1", "coupled sampler equivalence", criterion_1_coupling),
    ("C2", "splitting-CDF identity", criterion_2_splitting_cdf),
    ("C3", "separator dichotomy", criterion_3_dichotomy),
    ("C4", "giant component stability", criterion_4_giant),
    ("C5", "clustering coefficient Omega(1)", criterion_5_clustering),
    ("C6", "stochastic triangle inequality", criterion_6_triangle),
    ("C7", "degree power law", criterion_7_degree_law),
    ("C8", "cut-oracle soundness", criterion_8_oracle),
    ("C9", "phase monotonicity and inflation", criterion_9_phases),
    ("C10", "subinterval occupancy diagnostic", criterion_10_occupancy),
]


def run_all(out_dir: Optional[str] = None, echo: bool = True) -> list[CriterionResult]:
    results = []
    for key, name, fn in CRITERIA:
        t0 = time.perf_counter()
        passed, detail = fn()
        res = CriterionResult(key, name, passed, detail, time.perf_counter() - t0)
        results.append(res)
        if echo:
            print(f"{'PASS' if passed else 'FAIL'} {key} {name}: {detail}")
    if out_dir is not None:
        from .harness import emit_plot_data, write_csv

        records = sweep_records("euclidean_max") + sweep_records("mcd")
        write_csv(records, f"{out_dir}/acceptance_sweep.csv")
        emit_plot_data(records, out_dir)
    return results

import numpy as np
import pytest

import girglab.sampler as sampler
from girglab.geometry import component_torus_diff, euclidean_geometry, mcd_geometry
from girglab.sampler import (
    ModelParams,
    edge_probability,
    model_positions,
    model_weights,
    p_lower,
    pair_randomness,
    pair_y_arrays,
    sample_coupled,
    sample_direct,
    sample_phased,
    split_cdf,
    split_inverse_cdf,
)
from girglab.streams import Role, stream_base, uniforms_range
from girglab.weights import PowerLawParams


def _params(n=100, seed=0, **kw):
    kw.setdefault("d", 2)
    kw.setdefault("alpha", 1.5)
    kw.setdefault("beta", 2.5)
    return ModelParams(n=n, seed=seed, **kw)


# ---- parameter validation ---------------------------------------------------


def test_param_validation():
    with pytest.raises(ValueError):
        _params(alpha=1.0)
    with pytest.raises(ValueError):
        _params(beta=3.2)
    with pytest.raises(ValueError):
        _params(prefactor_c=0.0)
    with pytest.raises(ValueError):
        _params(geometry=mcd_geometry(3))  # d mismatch
    with pytest.raises(ValueError):
        _params(weight_params=PowerLawParams(beta=2.7))  # beta mismatch


# ---- splitting CDF ----------------------------------------------------------


def test_split_inverse_cdf_values():
    assert split_inverse_cdf(0.5) == pytest.approx(0.75)
    assert split_cdf(0.75) == pytest.approx(0.5)
    assert split_inverse_cdf(0.0) == 0.0


def test_split_cdf_round_trip_grid():
    u = np.arange(1000) / 1000.0
    err = np.abs(split_cdf(split_inverse_cdf(u)) - u)
    assert err.max() <= 1e-12


def test_min_of_split_pair_is_uniform():
    m = 1_000_000
    y1 = split_inverse_cdf(uniforms_range(stream_base(0, Role.PAIR_Y1), 0, m))
    y2 = split_inverse_cdf(uniforms_range(stream_base(0, Role.PAIR_Y2), 0, m))
    s = np.sort(np.minimum(y1, y2))
    ks = max(
        np.max(np.abs(s - np.arange(1, m + 1) / m)),
        np.max(np.abs(s - np.arange(0, m) / m)),
    )
    assert ks < 0.005


def test_each_split_variate_bounds_c():
    # P[Y < c] = 1 - sqrt(1-c) lies between c/2 and c
    m = 200_000
    y1 = split_inverse_cdf(uniforms_range(stream_base(1, Role.PAIR_Y1), 0, m))
    for c in (0.1, 0.5, 0.9):
        freq = np.mean(y1 < c)
        assert c / 2 - 0.01 <= freq <= c + 0.01


# ---- probability kernel -----------------------------------------------------


def test_edge_probability_example():
    # V(dist) = dist in linearized mode; (1*1/(100*0.1))^2 = 0.01
    p = _params(n=100, alpha=2.0)
    assert edge_probability(p, 1.0, 1.0, 0.1) == pytest.approx(0.01)


def test_edge_probability_saturates():
    p = _params(n=100, prefactor_c=0.8)
    assert edge_probability(p, 2.0, 5.0, 0.05) == pytest.approx(0.8)  # V <= wu*wv/n
    assert edge_probability(p, 1.0, 1.0, 0.0) == pytest.approx(0.8)  # zero distance


def test_edge_probability_monotone():
    p = _params(n=1000)
    dists = np.linspace(0.0, 0.5, 100)
    probs = edge_probability(p, 1.0, 1.0, dists)
    assert np.all(np.diff(probs) <= 1e-15)
    prods = np.linspace(0.5, 50, 100)
    probs_w = np.array([edge_probability(p, w, 1.0, 0.2) for w in prods])
    assert np.all(np.diff(probs_w) >= -1e-15)


def test_p_lower_examples():
    p = _params(n=100, prefactor_c=0.6)
    assert p_lower(p, 1.0, 2.0, 0.01) == pytest.approx(0.6)  # r <= wu*wv/n
    # equals edge_probability at the true distance under linearized volume
    assert p_lower(p, 1.5, 2.0, 0.3) == pytest.approx(edge_probability(p, 1.5, 2.0, 0.3))
    assert p_lower(p, 1.0, 1.0, 1e12) < 1e-15  # r -> infinity decays to 0


def test_pair_randomness_distribution_and_distinctness():
    p = _params(n=2000, seed=5)
    pr = pair_randomness(p, 3, 7)
    assert pr == pair_randomness(p, 7, 3)  # canonical pair keying
    assert 0.0 <= pr.y1 < 1.0 and 0.0 <= pr.y2 < 1.0
    with pytest.raises(ValueError):
        pair_randomness(p, 3, 3)


# ---- EIC decomposition ------------------------------------------------------


def test_lb1_lb2_imply_eic():
    # if Y1 beats the lower bound on the leading coordinates, or Y2 beats it
    # on the last coordinate, then min(Y1, Y2) beats the full probability
    p = _params(n=500, seed=9)
    rng = np.random.default_rng(9)
    m = 1_000_000
    x = rng.random((m, 2))
    y = rng.random((m, 2))
    w1 = 1.0 / rng.random(m) ** (2 / 3)
    w2 = 1.0 / rng.random(m) ** (2 / 3)
    d1 = component_torus_diff(x[:, 0], y[:, 0])
    d2 = component_torus_diff(x[:, 1], y[:, 1])
    full = np.minimum(d1, d2)
    y1 = split_inverse_cdf(rng.random(m))
    y2 = split_inverse_cdf(rng.random(m))
    lb1 = y1 < p_lower(p, w1, w2, d1)
    lb2 = y2 < p_lower(p, w1, w2, d2)
    eic = np.minimum(y1, y2) < edge_probability(p, w1, w2, full)
    assert np.all(eic[lb1 | lb2])


def test_close_pairs_connect_with_probability_c():
    # pairs at mcd distance <= w_min^2/n are adjacent with probability c
    p = _params(n=1000, prefactor_c=0.7, seed=13)
    m = 10_000
    rng = np.random.default_rng(13)
    dist = rng.random(m) * (1.0 / p.n)  # planted close pairs
    probs = edge_probability(p, 1.0, 1.0, dist)
    assert np.all(probs == pytest.approx(0.7))
    us = np.zeros(m, dtype=np.int64)
    vs = np.arange(1, m + 1, dtype=np.int64)
    y1, y2 = pair_y_arrays(_params(n=m + 1, prefactor_c=0.7, seed=13), us, vs)
    freq = np.mean(np.minimum(y1, y2) < 0.7)
    assert freq >= 0.7 - 0.02


# ---- direct sampler ---------------------------------------------------------


def test_direct_sampler_saturated_pair():
    # both weights pinned at 5 make every pair probability 1
    wp = PowerLawParams(beta=2.5, w_min=5.0, w_cap=5.0)
    p = _params(n=2, weight_params=wp, prefactor_c=1.0, seed=3)
    g = sample_direct(p)
    assert g.edge_count == 1


def test_direct_sampler_vanishing_probability():
    # microscopic weights drive every pair probability to ~1e-24
    wp = PowerLawParams(beta=2.5, w_min=1e-8, w_cap=1e-8)
    p = _params(n=3, weight_params=wp, seed=4)
    assert sample_direct(p).edge_count == 0


def test_direct_sampler_deterministic():
    p = _params(n=300, seed=17)
    assert sample_direct(p).same_edges(sample_direct(p))


def test_direct_sampler_chunk_invariance(monkeypatch):
    p = _params(n=257, seed=21)
    ref = sample_direct(p)
    monkeypatch.setattr(sampler, "_CHUNK_PAIRS", 1000)
    alt = sample_direct(p)
    assert ref.same_edges(alt)


def test_direct_mean_degree_stable_across_seeds():
    degs = []
    for seed in range(10):
        g = sample_direct(_params(n=10_000, seed=seed))
        degs.append(2 * g.edge_count / g.n)
    mid = np.mean(degs)
    assert all(abs(d - mid) / mid <= 0.15 for d in degs)


def test_positions_and_weights_shapes():
    p = _params(n=50)
    pos = model_positions(p)
    assert pos.shape == (50, 2)
    assert pos.min() >= 0 and pos.max() < 1
    ws = model_weights(p)
    assert ws.weights.shape == (50,)
    assert ws.weights.min() >= 1.0


# ---- phased sampler ---------------------------------------------------------


def test_phased_rejects_bad_geometry():
    with pytest.raises(ValueError, match="mcd"):
        sample_phased(_params(geometry=euclidean_geometry(2)), f=0.1)
    with pytest.raises(ValueError, match="d >= 2"):
        sample_phased(ModelParams(d=1, n=10, alpha=1.5, beta=2.5), f=0.1)
    with pytest.raises(ValueError, match="linearized"):
        sample_phased(_params(geometry=mcd_geometry(2, "exact")), f=0.1)
    with pytest.raises(ValueError, match="f must"):
        sample_phased(_params(), f=1.0)


def _edge_keys(g):
    ea = g.edge_array()
    return set(map(tuple, ea.tolist()))


def test_phase_nesting():
    for seed in range(20):
        tr = sample_phased(_params(n=300, seed=seed), f=0.1)
        k1, k2 = _edge_keys(tr.g1), _edge_keys(tr.g2)
        k3, k4 = _edge_keys(tr.g3), _edge_keys(tr.g4)
        assert k1 <= k2 <= k3 <= k4


def test_phase_snapshots_are_complete_for_finalized_pairs():
    tr = sample_phased(_params(n=300, seed=2), f=0.1)
    n = 300
    in_giant = np.zeros(n, dtype=bool)
    in_giant[tr.giant1] = True
    in_f = np.zeros(n, dtype=bool)
    in_f[tr.f_set] = True
    k2, k3, k4 = _edge_keys(tr.g2), _edge_keys(tr.g3), _edge_keys(tr.g4)
    for u, v in k4:
        if not (in_giant[u] or in_giant[v]):
            assert (u, v) in k2  # both outside the phase-1 giant: fixed by G2
        if not (in_f[u] or in_f[v]):
            assert (u, v) in k3  # both outside F: fixed by G3


def test_phased_f_zero_is_noop():
    tr = sample_phased(_params(n=200, seed=8), f=0.0)
    assert tr.f_set.size == 0
    assert tr.g3.same_edges(tr.g4)


def test_phased_partial_positions():
    tr = sample_phased(_params(n=120, seed=1), f=0.2)
    assert np.all(np.isnan(tr.g1.positions[:, -1]))
    assert not np.any(np.isnan(tr.g4.positions))
    # g3 hides exactly the last coordinates of F
    hidden = np.isnan(tr.g3.positions[:, -1])
    assert set(np.flatnonzero(hidden)) == set(tr.f_set.tolist())


def test_phased_enumeration_covers_all_vertices():
    tr = sample_phased(_params(n=150, seed=3), f=0.15)
    assert np.array_equal(np.sort(tr.order), np.arange(150))
    # F comes last, giant-minus-F before it
    tail = tr.order[150 - tr.f_set.size :]
    assert np.array_equal(np.sort(tail), tr.f_set)


def test_f_set_is_low_weight_giant_subset():
    tr = sample_phased(_params(n=400, seed=5), f=0.1)
    assert np.all(np.isin(tr.f_set, tr.giant1))
    w = tr.g1.weights[tr.f_set]
    assert np.all(w < tr.b_prime)


def test_b_prime_leaves_half_the_giant_below():
    tr = sample_phased(_params(n=400, seed=6), f=0.1)
    w_giant = tr.g1.weights[tr.giant1]
    assert np.count_nonzero(w_giant < tr.b_prime) >= tr.giant1.size / 2
    # minimality: one less would not do
    assert np.count_nonzero(w_giant < tr.b_prime - 1.0) < tr.giant1.size / 2


# ---- coupling ---------------------------------------------------------------


def test_coupled_equality_many_seeds():
    for seed in range(100):
        direct, trace = sample_coupled(_params(n=60, seed=seed), f=0.1)
        assert direct.same_edges(trace.g4)


def test_coupled_equality_single_vertex():
    direct, trace = sample_coupled(ModelParams(d=2, n=1, alpha=1.5, beta=2.5), f=0.1)
    assert direct.edge_count == 0
    assert trace.g4.edge_count == 0

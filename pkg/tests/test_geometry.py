import numpy as np
import pytest

from girglab.geometry import (
    GeometrySpec,
    TorusPoint,
    component_torus_diff,
    distance,
    euclidean_geometry,
    exact_ball_volume,
    mcd_geometry,
    sample_in_ball,
    sample_in_ball_many,
    sample_point,
    torus_diff,
    volume,
)


# ---- torus difference -------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,expected",
    [(0.1, 0.9, 0.2), (0.3, 0.3, 0.0), (0.0, 0.5, 0.5), (0.75, 0.25, 0.5)],
)
def test_torus_diff_values(a, b, expected):
    assert torus_diff(a, b) == pytest.approx(expected, abs=1e-15)


def test_torus_diff_reduces_modulo_one():
    assert torus_diff(1.2, 0.1) == pytest.approx(0.1)
    assert torus_diff(-0.1, 0.1) == pytest.approx(0.2)


def test_torus_diff_symmetric_and_bounded():
    rng = np.random.default_rng(0)
    for a, b in rng.random((200, 2)):
        d1, d2 = torus_diff(a, b), torus_diff(b, a)
        assert d1 == d2
        assert 0.0 <= d1 <= 0.5


# ---- distances --------------------------------------------------------------


def test_distance_examples():
    x = TorusPoint([0.1, 0.4])
    y = TorusPoint([0.3, 0.45])
    assert distance(mcd_geometry(2), x, y) == pytest.approx(0.05)
    assert distance(euclidean_geometry(2), x, y) == pytest.approx(0.2)
    assert distance(mcd_geometry(1), TorusPoint([0.1]), TorusPoint([0.9])) == pytest.approx(0.2)


def test_distance_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        distance(mcd_geometry(2), [0.1], [0.2, 0.3])


def test_distance_properties():
    rng = np.random.default_rng(1)
    geo_m = mcd_geometry(3)
    geo_e = euclidean_geometry(3)
    for _ in range(200):
        x, y = rng.random(3), rng.random(3)
        dm = distance(geo_m, x, y)
        de = distance(geo_e, x, y)
        assert dm == distance(geo_m, y, x)
        assert distance(geo_m, x, x) == 0.0
        assert dm <= de  # min over components never exceeds the max


def test_d1_mcd_equals_euclidean_on_grid():
    geo_m = mcd_geometry(1)
    geo_e = euclidean_geometry(1)
    g = np.linspace(0.0, 0.99, 100)
    for a in g:
        diffs_m = [distance(geo_m, [a], [b]) for b in g]
        diffs_e = [distance(geo_e, [a], [b]) for b in g]
        assert diffs_m == diffs_e


# ---- GeometrySpec validation ----------------------------------------------------------


def test_geometry_spec_rejects_linearized_euclidean():
    with pytest.raises(ValueError, match="linearized"):
        GeometrySpec("euclidean_max", 2, "linearized")


def test_geometry_spec_defaults():
    assert mcd_geometry(2).volume_mode == "linearized"
    assert euclidean_geometry(2).volume_mode == "exact"
    with pytest.raises(ValueError):
        GeometrySpec("mcd", 0)
    with pytest.raises(ValueError):
        GeometrySpec("taxicab", 2)


def test_torus_point_validation():
    with pytest.raises(ValueError):
        TorusPoint([0.2, 1.0])
    with pytest.raises(ValueError):
        TorusPoint([-0.1])


# ---- volumes ----------------------------------------------------------------


def test_volume_examples():
    assert volume(mcd_geometry(2, "exact"), 0.25) == pytest.approx(0.75)
    assert volume(mcd_geometry(5, "linearized"), 0.3) == pytest.approx(0.3)
    assert volume(euclidean_geometry(2), 0.25) == pytest.approx(0.25)


def test_volume_monotone_and_bounded():
    rs = np.linspace(0.0, 0.5, 200)
    for geom in (mcd_geometry(3, "exact"), mcd_geometry(3, "linearized"), euclidean_geometry(3)):
        v = volume(geom, rs)
        assert v[0] == 0.0
        assert np.all(np.diff(v) >= 0)
        assert np.all((v >= 0) & (v <= 1))
    # 2r <= 1-(1-2r)^d <= 2dr for the exact mcd volume
    v = volume(mcd_geometry(4, "exact"), rs)
    assert np.all(v >= 2 * rs - 1e-12)
    assert np.all(v <= 8 * rs + 1e-12)


# ---- sampling ---------------------------------------------------------------


def test_sample_point_deterministic():
    a = sample_point(2, np.random.default_rng(5))
    b = sample_point(2, np.random.default_rng(5))
    assert np.array_equal(a.coords, b.coords)


def test_sample_point_uniform_mean():
    rng = np.random.default_rng(0)
    xs = np.array([sample_point(1, rng).coords[0] for _ in range(2000)])
    # cheap stand-in for the 1e5-sample check; full check below via vector draw
    big = rng.random(100_000)
    assert abs(big.mean() - 0.5) < 0.01
    assert abs(xs.mean() - 0.5) < 0.05


def test_sample_point_coordinates_ks():
    rng = np.random.default_rng(3)
    pts = rng.random((100_000, 2))
    for i in range(2):
        s = np.sort(pts[:, i])
        m = s.size
        ks = max(
            np.max(np.abs(s - np.arange(1, m + 1) / m)),
            np.max(np.abs(s - np.arange(0, m) / m)),
        )
        assert ks < 0.01


def test_ball_sampling_postcondition():
    rng = np.random.default_rng(7)
    for geom in (mcd_geometry(2), euclidean_geometry(2)):
        center = [0.9, 0.1]  # near the wrap-around
        pts = sample_in_ball_many(geom, center, 0.05, 500, rng)
        for p in pts:
            assert distance(geom, center, p) <= 0.05
        single = sample_in_ball(geom, center, 0.05, rng)
        assert distance(geom, center, single.coords) <= 0.05


def test_ball_sampling_budget_error():
    rng = np.random.default_rng(7)
    with pytest.raises(ValueError, match="larger eps"):
        sample_in_ball(euclidean_geometry(3), [0.5, 0.5, 0.5], 0.005, rng)


def test_ball_sampling_slab_symmetry():
    # in an mcd ball, membership comes from one of two coordinate slabs of
    # equal measure; the first-coordinate slab should hold about
    # 2eps / (4eps - 4eps^2) of the mass
    rng = np.random.default_rng(11)
    eps = 0.01
    center = np.array([0.5, 0.5])
    pts = sample_in_ball_many(mcd_geometry(2), center, eps, 10_000, rng)
    frac = np.mean(component_torus_diff(pts[:, 0], center[0]) <= eps)
    assert abs(frac - 0.5) <= 0.03


def test_exact_ball_volume_ignores_mode():
    assert exact_ball_volume(mcd_geometry(2, "linearized"), 0.25) == pytest.approx(0.75)


def test_ball_rejection_acceptance_rate():
    # the acceptance rate of torus rejection equals the exact ball volume:
    # 1 - 0.98^2 for an mcd ball of radius 0.01 in d=2
    assert exact_ball_volume(mcd_geometry(2), 0.01) == pytest.approx(0.0396)
    rng = np.random.default_rng(5)
    props = rng.random((200_000, 2))
    diffs = component_torus_diff(props, np.array([0.5, 0.5]))
    rate = np.mean(diffs.min(axis=1) <= 0.01)
    assert rate == pytest.approx(0.0396, abs=0.002)

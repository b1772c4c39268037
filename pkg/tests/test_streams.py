import numpy as np
import pytest

from girglab.streams import Role, pair_index, stream_base, uniforms_at, uniforms_range


def test_same_key_same_values():
    base = stream_base(42, Role.POSITION)
    idx = np.arange(100, dtype=np.uint64)
    assert np.array_equal(uniforms_at(base, idx), uniforms_at(base, idx))


def test_roles_give_distinct_streams():
    idx = np.arange(1000, dtype=np.uint64)
    a = uniforms_at(stream_base(42, Role.PAIR_Y1), idx)
    b = uniforms_at(stream_base(42, Role.PAIR_Y2), idx)
    assert not np.array_equal(a, b)


def test_seeds_give_distinct_streams():
    idx = np.arange(1000, dtype=np.uint64)
    a = uniforms_at(stream_base(1, Role.POSITION), idx)
    b = uniforms_at(stream_base(2, Role.POSITION), idx)
    assert not np.array_equal(a, b)


def test_random_access_matches_range():
    base = stream_base(7, Role.WEIGHT)
    whole = uniforms_range(base, 0, 1000)
    scattered = uniforms_at(base, np.array([3, 998, 500], dtype=np.uint64))
    assert scattered[0] == whole[3]
    assert scattered[1] == whole[998]
    assert scattered[2] == whole[500]


def test_uniforms_in_unit_interval():
    u = uniforms_range(stream_base(3, Role.POSITION), 0, 100_000)
    assert u.min() >= 0.0
    assert u.max() < 1.0


def test_uniformity_ks():
    m = 100_000
    u = np.sort(uniforms_range(stream_base(9, Role.POSITION), 0, m))
    hi = np.arange(1, m + 1) / m
    lo = np.arange(0, m) / m
    ks = max(np.max(np.abs(u - hi)), np.max(np.abs(u - lo)))
    assert ks < 0.01


def test_pair_index_enumerates_all_pairs():
    n = 12
    seen = set()
    for u in range(n):
        for v in range(u + 1, n):
            seen.add(pair_index(u, v, n))
    assert seen == set(range(n * (n - 1) // 2))


def test_pair_index_is_symmetric():
    assert pair_index(3, 9, 20) == pair_index(9, 3, 20)
    us = np.array([0, 5, 7])
    vs = np.array([5, 0, 2])
    assert np.array_equal(pair_index(us, vs, 10), pair_index(vs, us, 10))


@pytest.mark.parametrize("u,v,n,expected", [(0, 1, 5, 0), (0, 4, 5, 3), (1, 2, 5, 4), (3, 4, 5, 9)])
def test_pair_index_examples(u, v, n, expected):
    assert pair_index(u, v, n) == expected

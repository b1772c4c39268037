"""Counter-based random streams: every variate is a pure function of
(seed, role, index).

The generator is a splitmix64-style hash: for a given (seed, role) we derive a
64-bit stream base, and the variate at position ``index`` is the finalizer
applied to ``base + (index + 1) * GOLDEN``.  There is no sequential state, so
any subset of a stream can be materialized in any order, in any partitioning,
with bit-identical results.  That property is what makes the coupled samplers
comparable edge-for-edge and makes concurrent block processing safe.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Role",
    "stream_base",
    "words_at",
    "uniforms_at",
    "uniforms_range",
    "pair_index",
]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_ONE = np.uint64(1)
# 2^-53; uniforms use the top 53 bits so values lie in [0, 1)
_INV53 = float.fromhex("0x1.0p-53")


class Role:
    """Stream roles.  Distinct roles give statistically independent streams."""

    POSITION = 1
    WEIGHT = 2
    PAIR_Y1 = 3
    PAIR_Y2 = 4
    F_SELECT = 5
    CUT_SEARCH = 6


_MASK = 0xFFFFFFFFFFFFFFFF


def mix64(z: np.ndarray) -> np.ndarray:
    """splitmix64 finalizer; bijective on uint64 with full avalanche."""
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


def stream_base(seed: int, role: int) -> np.uint64:
    """Derive the 64-bit base of the (seed, role) stream."""
    z = (int(seed) + int(_GOLDEN) * int(role)) & _MASK
    z = ((z ^ (z >> 30)) * int(_MIX1)) & _MASK
    z = ((z ^ (z >> 27)) * int(_MIX2)) & _MASK
    return np.uint64(z ^ (z >> 31))


def words_at(base: np.uint64, indices: np.ndarray) -> np.ndarray:
    """Raw 64-bit words of a stream at the given positions (uint64 array)."""
    idx = np.asarray(indices, dtype=np.uint64)
    return mix64(base + (idx + _ONE) * _GOLDEN)


def uniforms_at(base: np.uint64, indices: np.ndarray) -> np.ndarray:
    """Uniform [0,1) variates of a stream at the given positions."""
    return (words_at(base, indices) >> _S11) * _INV53


def uniforms_range(base: np.uint64, start: int, count: int) -> np.ndarray:
    """Uniform [0,1) variates at positions start .. start+count-1."""
    return uniforms_at(base, np.arange(start, start + count, dtype=np.uint64))


def pair_index(u, v, n: int):
    """Canonical index of the unordered pair {u, v} among all C(n,2) pairs.

    Pairs are ordered lexicographically by (min, max); accepts scalars or
    arrays.  Both samplers key the per-pair variates Y1, Y2 by this index,
    which is what makes the evaluation order irrelevant.
    """
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    idx = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
    if idx.ndim == 0:
        return int(idx)
    return idx

"""Torus arithmetic, distance functions, ball volumes, and uniform sampling.

Two distance functions are supported on the d-torus T^d = [0,1)^d:

* ``euclidean_max`` — the max over per-coordinate torus differences.  Any norm
  gives the same model class up to constants; the infinity norm is used as the
  canonical representative because its ball volume is exactly ``(2r)^d``.
* ``mcd`` — the minimum component distance, the min over per-coordinate torus
  differences.  Not a metric for d > 1.  Its exact ball volume is
  ``1 - (1-2r)^d``; the linearized variant ``V(r) = r`` (off by at most a
  factor 2d) is the default used in edge probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

__all__ = [
    "EUCLIDEAN_MAX",
    "MCD",
    "TorusPoint",
    "GeometrySpec",
    "torus_diff",
    "component_torus_diff",
    "distance",
    "volume",
    "sample_point",
    "sample_in_ball",
    "sample_in_ball_many",
]

EUCLIDEAN_MAX = "euclidean_max"
MCD = "mcd"

_KINDS = (EUCLIDEAN_MAX, MCD)
_VOLUME_MODES = ("exact", "linearized")

# Rejection sampling gives up when the expected number of torus proposals per
# accepted point exceeds this.
REJECTION_BUDGET = 10_000


@dataclass(frozen=True)
class TorusPoint:
    """A point on T^d; every coordinate lies in [0, 1)."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coords, dtype=np.float64))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("TorusPoint needs a 1-d coordinate sequence of length >= 1")
        if np.any((c < 0.0) | (c >= 1.0)):
            raise ValueError("torus coordinates must lie in [0, 1)")
        object.__setattr__(self, "coords", c)

    @property
    def dimension(self) -> int:
        return self.coords.size


@dataclass(frozen=True)
class GeometrySpec:
    """Distance kind, ambient dimension, and which ball volume to use.

    ``volume_mode`` defaults to ``linearized`` for mcd (the variant used in
    edge probabilities) and ``exact`` for euclidean_max, which only has an
    exact mode.
    """

    kind: str
    dimension: int
    volume_mode: Optional[str] = field(default=None)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown geometry kind {self.kind!r}; expected one of {_KINDS}")
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise ValueError("dimension must be an integer >= 1")
        object.__setattr__(self, "dimension", int(self.dimension))
        mode = self.volume_mode
        if mode is None:
            mode = "linearized" if self.kind == MCD else "exact"
        if mode not in _VOLUME_MODES:
            raise ValueError(f"unknown volume_mode {mode!r}; expected one of {_VOLUME_MODES}")
        if self.kind == EUCLIDEAN_MAX and mode == "linearized":
            raise ValueError("linearized volume_mode applies to mcd only")
        object.__setattr__(self, "volume_mode", mode)


def mcd_geometry(dimension: int, volume_mode: Optional[str] = None) -> GeometrySpec:
    return GeometrySpec(MCD, dimension, volume_mode)


def euclidean_geometry(dimension: int) -> GeometrySpec:
    return GeometrySpec(EUCLIDEAN_MAX, dimension)


def torus_diff(a: float, b: float) -> float:
    """Torus absolute difference min{|a-b|, 1-|a-b|}; always in [0, 1/2].

    Inputs outside [0,1) are reduced modulo 1 first.
    """
    d = abs((a % 1.0) - (b % 1.0))
    return min(d, 1.0 - d)


def component_torus_diff(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized torus absolute difference of coordinate arrays in [0,1)."""
    d = np.abs(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64))
    return np.minimum(d, 1.0 - d)


def _coords(x) -> np.ndarray:
    if isinstance(x, TorusPoint):
        return x.coords
    return np.atleast_1d(np.asarray(x, dtype=np.float64))


def distance(geom: GeometrySpec, x, y) -> float:
    """Distance between two torus points under the given geometry.

    mcd takes the min over per-coordinate torus differences, euclidean_max
    the max.  For d = 1 the two coincide.
    """
    cx, cy = _coords(x), _coords(y)
    if cx.size != geom.dimension or cy.size != geom.dimension:
        raise ValueError(
            f"dimension mismatch: geometry is {geom.dimension}-dimensional, "
            f"points have {cx.size} and {cy.size} coordinates"
        )
    diffs = component_torus_diff(cx, cy)
    if geom.kind == MCD:
        return float(np.min(diffs))
    return float(np.max(diffs))


def volume(geom: GeometrySpec, r) -> float | np.ndarray:
    """Volume of the radius-r ball, in [0, 1].

    mcd exact: ``1 - (1 - 2 min(r,1/2))^d``; mcd linearized: ``min(r, 1/2)``;
    euclidean_max: ``min((2r)^d, 1)``.  Accepts scalars or arrays.
    """
    r_arr = np.asarray(r, dtype=np.float64)
    if np.any(r_arr < 0):
        raise ValueError("radius must be >= 0")
    if geom.kind == MCD:
        rc = np.minimum(r_arr, 0.5)
        if geom.volume_mode == "linearized":
            out = rc
        else:
            out = 1.0 - (1.0 - 2.0 * rc) ** geom.dimension
    else:
        out = np.minimum((2.0 * r_arr) ** geom.dimension, 1.0)
    if np.isscalar(r) or r_arr.ndim == 0:
        return float(out)
    return out


def exact_ball_volume(geom: GeometrySpec, r: float) -> float:
    """True measure of the radius-r ball, independent of volume_mode."""
    exact = GeometrySpec(geom.kind, geom.dimension, "exact")
    return float(volume(exact, r))


def sample_point(d: int, rng: np.random.Generator) -> TorusPoint:
    """Uniform point on T^d: coordinates i.i.d. uniform on [0, 1)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return TorusPoint(rng.random(d))


def sample_in_ball_many(
    geom: GeometrySpec, center, eps: float, count: int, rng: np.random.Generator
) -> np.ndarray:
    """``count`` points uniform in the eps-ball around ``center``, by rejection
    from the torus.

    Raises if eps is so small that the expected number of proposals per
    accepted point exceeds the rejection budget.
    """
    c = _coords(center)
    if c.size != geom.dimension:
        raise ValueError("center dimension does not match geometry")
    if not (0.0 < eps <= 0.5):
        raise ValueError("eps must lie in (0, 1/2]")
    vol = exact_ball_volume(geom, eps)
    if vol <= 0.0 or 1.0 / vol > REJECTION_BUDGET:
        raise ValueError(
            f"ball volume {vol:.3e} makes rejection sampling exceed the budget of "
            f"{REJECTION_BUDGET} expected attempts per sample; use a larger eps"
        )
    d = geom.dimension
    out = np.empty((count, d), dtype=np.float64)
    got = 0
    # oversample each batch by the expected rejection factor
    batch = max(1024, int(min(count / vol * 1.2, 4_000_000)))
    while got < count:
        props = rng.random((batch, d))
        diffs = component_torus_diff(props, c[None, :])
        if geom.kind == MCD:
            dist = diffs.min(axis=1)
        else:
            dist = diffs.max(axis=1)
        acc = props[dist <= eps]
        take = min(acc.shape[0], count - got)
        out[got : got + take] = acc[:take]
        got += take
    return out


def sample_in_ball(
    geom: GeometrySpec, center, eps: float, rng: np.random.Generator
) -> TorusPoint:
    """One point uniform in the eps-ball around ``center``."""
    return TorusPoint(sample_in_ball_many(geom, center, eps, 1, rng)[0])

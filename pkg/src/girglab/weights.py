"""Power-law weight sequences and tail-exponent estimation.

Weights are i.i.d. truncated Pareto: ``w = min(w_cap, w_min * U^(-1/(beta-1)))``
with U uniform on (0, 1].  The complementary tail then concentrates around
``n * (w / w_min)^-(beta-1)`` for w below the cap, which is the power-law
behaviour the model requires of its weight sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "PowerLawParams",
    "WeightSequence",
    "default_cap",
    "weights_from_uniforms",
    "sample_weights",
    "tail_count",
    "fit_tail_exponent",
]


@dataclass(frozen=True)
class PowerLawParams:
    """Exponent and truncation of the weight law.

    ``w_cap`` may be left None, in which case it resolves to ``n^(1/(beta-1))``
    at sampling time (the point where the expected count above the cap is
    about one).
    """

    beta: float
    w_min: float = 1.0
    w_cap: Optional[float] = None

    def __post_init__(self):
        if not (2.0 < self.beta < 3.0):
            raise ValueError("beta must lie in the open interval (2, 3)")
        if self.w_min <= 0.0:
            raise ValueError("w_min must be positive")
        if self.w_cap is not None and self.w_cap < self.w_min:
            raise ValueError("w_cap must be >= w_min")


@dataclass(frozen=True)
class WeightSequence:
    """A sampled weight vector together with its total W = sum(w)."""

    weights: np.ndarray
    total: float

    @property
    def n(self) -> int:
        return self.weights.size


def default_cap(params: PowerLawParams, n: int) -> float:
    if params.w_cap is not None:
        return float(params.w_cap)
    return float(n ** (1.0 / (params.beta - 1.0)))


def weights_from_uniforms(params: PowerLawParams, u: np.ndarray, n: Optional[int] = None) -> WeightSequence:
    """Transform uniforms in [0,1) into truncated-Pareto weights.

    ``n`` only matters when the cap is unresolved; it defaults to len(u).
    """
    u = np.asarray(u, dtype=np.float64)
    if np.any((u < 0.0) | (u >= 1.0)):
        raise ValueError("uniform inputs must lie in [0, 1)")
    cap = default_cap(params, n if n is not None else u.size)
    # 1 - u lies in (0, 1], so the power is finite
    w = params.w_min * (1.0 - u) ** (-1.0 / (params.beta - 1.0))
    np.minimum(w, cap, out=w)
    return WeightSequence(weights=w, total=float(w.sum()))


def sample_weights(params: PowerLawParams, n: int, rng: np.random.Generator) -> WeightSequence:
    """n i.i.d. truncated-Pareto weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return weights_from_uniforms(params, rng.random(n), n)


def tail_count(ws: WeightSequence | Sequence[float], w: float) -> int:
    """Exact count of weights >= w."""
    if w <= 0:
        raise ValueError("tail threshold must be positive")
    values = ws.weights if isinstance(ws, WeightSequence) else np.asarray(ws, dtype=np.float64)
    return int(np.count_nonzero(values >= w))


def fit_tail_exponent(values, cutoff: float) -> tuple[float, float]:
    """Hill estimate of the CCDF exponent above ``cutoff``.

    For data whose tail behaves like ``P(X >= x) ~ (x / cutoff)^-a`` the
    maximum-likelihood estimate is ``a = k / sum(log(x_i / cutoff))`` over the
    k values >= cutoff.  Returns (estimate, half_width) where the half-width
    is the 95% normal-approximation interval ``1.96 * a / sqrt(k)``.

    Raises ValueError when fewer than 100 values exceed the cutoff or when the
    tail is degenerate (all tail values equal, e.g. a constant sequence).
    """
    x = np.asarray(values, dtype=np.float64)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    tail = x[x >= cutoff]
    if tail.size < 100:
        raise ValueError(
            f"insufficient tail data: {tail.size} values >= {cutoff}, need at least 100"
        )
    logs = np.log(tail / cutoff)
    denom = float(logs.sum())
    if denom <= 0.0 or np.ptp(tail) == 0.0:
        raise ValueError("degenerate tail: no variation above the cutoff")
    k = tail.size
    est = k / denom
    half_width = 1.96 * est / np.sqrt(k)
    return float(est), float(half_width)

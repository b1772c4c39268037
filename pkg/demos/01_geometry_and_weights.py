"""
Torus geometries and power-law weights
======================================

The model lives on the d-dimensional unit torus with one of two distance
functions: the max-norm (the "euclidean" representative) and the minimum
component distance (MCD), which calls two points close as soon as ANY single
coordinate matches.  This script walks through distances, ball volumes, ball
sampling, and the weight law.
"""

import numpy as np

from girglab import (
    PowerLawParams,
    distance,
    euclidean_geometry,
    fit_tail_exponent,
    mcd_geometry,
    sample_weights,
    tail_count,
    torus_diff,
    volume,
)
from girglab.geometry import sample_in_ball_many

# ---- distances wrap around the torus ----------------------------------------

print("torus difference of 0.1 and 0.9:", torus_diff(0.1, 0.9), "(wraps around)")

x, y = [0.1, 0.4], [0.3, 0.45]
print("max-norm distance :", distance(euclidean_geometry(2), x, y))  # 0.2
print("mcd distance      :", distance(mcd_geometry(2), x, y))  # 0.05: one close coord suffices

# in one dimension the two coincide
print("d=1 agreement:", distance(mcd_geometry(1), [0.1], [0.9]) == distance(euclidean_geometry(1), [0.1], [0.9]))

# ---- ball volumes ------------------------------------------------------------

# an mcd ball is a union of d slabs: huge compared to a max-norm ball
r = 0.01
print(f"\nvolume of a radius-{r} ball in d=2:")
print("  max-norm      :", volume(euclidean_geometry(2), r))
print("  mcd (exact)   :", volume(mcd_geometry(2, 'exact'), r))
print("  mcd (V(r)=r)  :", volume(mcd_geometry(2, 'linearized'), r))

# rejection sampling in a ball; every accepted point is within eps
rng = np.random.default_rng(0)
pts = sample_in_ball_many(mcd_geometry(2), [0.5, 0.5], 0.05, 1000, rng)
dists = [distance(mcd_geometry(2), [0.5, 0.5], p) for p in pts]
print("max distance of 1000 ball samples:", max(dists), "<= 0.05")

# ---- weights -----------------------------------------------------------------

# truncated Pareto weights realize the power-law tail #{w_v >= w} ~ n w^-(beta-1)
params = PowerLawParams(beta=2.5, w_min=1.0)
ws = sample_weights(params, 100_000, rng)
print("\nweights: min", ws.weights.min(), " total/n", ws.total / ws.n)
print("tail count above 4:", tail_count(ws, 4.0), "(expected about", int(100_000 * 4.0**-1.5), ")")

est, half = fit_tail_exponent(ws.weights, cutoff=4.0)
print(f"Hill tail exponent: {est:.3f} ± {half:.3f}  (beta - 1 = 1.5)")

"""
Structural statistics: giant, clustering, degrees, triangles
============================================================

A sampled graph has (i) one linear-size component, (ii) clustering bounded
away from zero, and (iii) a degree power law matching the weight exponent.
The clustering survives under MCD because the geometry satisfies a STOCHASTIC
triangle inequality: two random points of an eps-ball land within 2*eps of
each other with probability about 1/d (they must pick the same small
coordinate), not with certainty as under a metric.
"""

import numpy as np

from girglab import (
    ModelParams,
    clustering_coefficient,
    connected_components,
    degree_report,
    euclidean_geometry,
    mcd_geometry,
    sample_direct,
    stochastic_triangle_estimate,
)

params = ModelParams(d=2, n=2**14, alpha=1.5, beta=2.5, prefactor_c=0.2, seed=1)
g = sample_direct(params)
print(f"sampled mcd graph: n={g.n}, edges={g.edge_count}, mean degree {2 * g.edge_count / g.n:.1f}")

lab = connected_components(g)
print(f"components: {lab.sizes.size}; giant holds {lab.giant_size} vertices "
      f"({lab.giant_size / g.n:.1%}); next largest {lab.sizes[1] if lab.sizes.size > 1 else 0}")

cc = clustering_coefficient(g)
print(f"mean clustering coefficient: {cc.mean:.3f} ({cc.low_degree_count} vertices below degree 2)")

rep = degree_report(g, cutoff=8.0)
print(f"max degree {rep.max_degree}; degree CCDF exponent {rep.tail_exponent:.2f} "
      f"± {rep.tail_half_width:.2f} (weights have exponent 1.5)")

# ---- the stochastic triangle inequality ---------------------------------------

rng = np.random.default_rng(3)
for d in (2, 3):
    est = stochastic_triangle_estimate(mcd_geometry(d), eps=0.005, C=2.0, samples=20_000, rng=rng)
    print(f"mcd d={d}: P[dist(x1,x2) <= 2 eps] = {est.probability:.3f} (>= 1/{d}),"
          f" volume ratio V(eps)/V(2 eps) = {est.volume_ratio:.3f}")

est = stochastic_triangle_estimate(euclidean_geometry(2), eps=0.05, C=2.0, samples=20_000, rng=rng)
print(f"max-norm: P = {est.probability} exactly (a metric obeys the triangle inequality)")

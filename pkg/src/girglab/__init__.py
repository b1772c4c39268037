"""girglab: geometric inhomogeneous random graphs on the torus.

Samplers (direct and six-phase uncovering, coupled through shared counter
based randomness), power-law weights, torus geometries (max-norm and minimum
component distance), balanced-separator searchers, and structural statistics
with an experiment harness.
"""

from .geometry import (
    EUCLIDEAN_MAX,
    MCD,
    GeometrySpec,
    TorusPoint,
    distance,
    euclidean_geometry,
    mcd_geometry,
    sample_in_ball,
    sample_point,
    torus_diff,
    volume,
)
from .graph import GirgGraph
from .weights import PowerLawParams, WeightSequence, fit_tail_exponent, sample_weights, tail_count
from .sampler import (
    ModelParams,
    PairRandomness,
    PhasedTrace,
    edge_probability,
    p_lower,
    sample_coupled,
    sample_direct,
    sample_phased,
    split_cdf,
    split_inverse_cdf,
)
from .graphstats import (
    ClusteringReport,
    ComponentLabeling,
    DegreeReport,
    OccupancyReport,
    TriangleEstimate,
    clustering_coefficient,
    connected_components,
    degree_report,
    giant_vertices,
    stochastic_triangle_estimate,
    subinterval_occupancy,
)
from .cuts import (
    Bipartition,
    CutResult,
    brute_force_min_cut,
    cross_edges,
    destroy_check,
    geometric_box_cut,
    geometric_halfspace_cut,
    local_search_cut,
    refine_cut,
)
from .harness import (
    ExperimentConfig,
    ScalingRecord,
    best_cut,
    emit_plot_data,
    fit_scaling_exponent,
    run_sweep,
)
from .graphio import GraphFormatError, export_graph, import_graph

__version__ = "0.1.0"

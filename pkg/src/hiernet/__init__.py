"""Deterministic hierarchical small-world scale-free graphs H(n, k)."""
from .analytic import (
    AnalyticReport,
    ClassStat,
    GammaUndefined,
    analytic_report,
    average_degree,
    class_census,
    clustering_coefficient_closed,
    cumulative_degree,
    distance_upper_bound,
    gamma_theory,
    metric_closed,
    size_closed,
    transitivity_closed,
    triangles_closed,
    triples_closed,
)
from .core import (
    DEFAULT_CAP,
    BudgetExceeded,
    GraphView,
    Kind,
    LabelError,
    ParamError,
    Params,
    VertexClass,
    classify,
    collapse,
    decode,
    encode,
    enumerate_edges,
    is_adjacent,
    neighbors,
    subgraph_vertices,
    validate_params,
)
from .empirical import EmpiricalReport, empirical_report, fit_clustering_exponent, fit_gamma
from .oracle import diametral_pair, dist_to_periphery, dist_to_root, distance

__version__ = "0.1.0"

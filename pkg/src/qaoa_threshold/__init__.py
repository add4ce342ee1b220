"""Closed-form MAX-CUT performance of QAOA_2 and 2-step threshold algorithms
on D-regular graphs of girth > 5, with brute-force oracles and sweep tooling."""

from .errors import ConsistencyError, DomainError, EdgeListError, ResourceError
from .stats import CutStats
from .qaoa import Qaoa2Angles, TrigBundle, alpha, f1, f2, f2_ring, kappa, term_A, trig_bundle
from .threshold import (
    ThresholdParams,
    correlation2,
    threshold1_improvement,
    threshold2_improvement,
)
from .optimize import (
    OptResult,
    TauWindow,
    compare_sweep,
    optimize_qaoa1,
    optimize_qaoa2,
    optimize_threshold,
)
from .graphs import Graph, cycle_graph, girth, heawood_graph, load_edge_list
from .oracle import enumerate_threshold_exact, mc_threshold, qaoa_statevector_cut_fraction

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CutStats",
    "DomainError",
    "EdgeListError",
    "Graph",
    "OptResult",
    "Qaoa2Angles",
    "ResourceError",
    "TauWindow",
    "ThresholdParams",
    "TrigBundle",
    "alpha",
    "compare_sweep",
    "correlation2",
    "cycle_graph",
    "enumerate_threshold_exact",
    "f1",
    "f2",
    "f2_ring",
    "girth",
    "heawood_graph",
    "kappa",
    "load_edge_list",
    "mc_threshold",
    "optimize_qaoa1",
    "optimize_qaoa2",
    "optimize_threshold",
    "qaoa_statevector_cut_fraction",
    "term_A",
    "threshold1_improvement",
    "threshold2_improvement",
    "trig_bundle",
]

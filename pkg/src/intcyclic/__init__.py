"""Interval cyclic edge-colorings: graph families, validators, explicit
constructions, an exact solver, analytic bounds, and non-colorability
certificates."""

from .coloring import (
    EdgeColoring,
    SpectrumReport,
    ValidationResult,
    Violation,
    is_cyclic_interval,
    is_integer_interval,
    spectrum,
    spectrum_report,
    validate_cyclic,
    validate_interval,
)
from .graphs import (
    Graph,
    GraphError,
    GraphMetrics,
    all_trees_up_to,
    enumerate_trees,
    make_complete,
    make_complete_bipartite,
    make_complete_tripartite,
    make_cycle,
    make_gdn,
    make_hub_tree,
    make_hypercube,
    make_kstar,
    make_path,
    make_tree_hat,
    metrics,
)

__all__ = [
    "EdgeColoring",
    "Graph",
    "GraphError",
    "GraphMetrics",
    "SpectrumReport",
    "ValidationResult",
    "Violation",
    "all_trees_up_to",
    "enumerate_trees",
    "is_cyclic_interval",
    "is_integer_interval",
    "make_complete",
    "make_complete_bipartite",
    "make_complete_tripartite",
    "make_cycle",
    "make_gdn",
    "make_hub_tree",
    "make_hypercube",
    "make_kstar",
    "make_path",
    "make_tree_hat",
    "metrics",
    "spectrum",
    "spectrum_report",
    "validate_cyclic",
    "validate_interval",
]

__version__ = "0.1.0"

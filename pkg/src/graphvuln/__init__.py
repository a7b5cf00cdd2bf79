"""Closeness-based graph vulnerability measures and degree-index fast paths."""

from .bounds import (
    BoundReport,
    bounds_for_graph,
    interval_from_order,
    interval_from_size_diameter,
    interval_triangle_quad_free,
    interval_tree_or_high_girth,
    path_closeness_closed_form,
    path_gc_closed_form,
    pendant_tree_closed_forms,
    upper_bound_radius,
)
from .errors import DisconnectedGraphError, GraphInputError
from .generators import (
    PendantSpec,
    SplitMix64,
    bistar_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    labeled_trees,
    path_graph,
    pendant_tree,
    pentagon_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
    tree_from_pruefer,
)
from .graph import (
    DistanceSummary,
    Graph,
    bfs_distances,
    build_graph,
    distance_summary,
    girth,
    is_connected,
)
from .graphio import decode_graph6, encode_graph6, format_edgelist, parse_edgelist
from .harness import CorpusConfig, VerificationReport, fastpath_benchmark, run_suite
from .invariants import (
    InvariantSet,
    StructuralFlags,
    closeness,
    compute_invariants,
    generalized_closeness,
    reduced_zagreb_m2,
    structural_flags,
    wiener_polarity,
    zagreb_m1,
    zagreb_m2,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CorpusConfig",
    "DisconnectedGraphError",
    "DistanceSummary",
    "Graph",
    "GraphInputError",
    "InvariantSet",
    "PendantSpec",
    "SplitMix64",
    "StructuralFlags",
    "VerificationReport",
    "bfs_distances",
    "bistar_graph",
    "bounds_for_graph",
    "build_graph",
    "closeness",
    "complete_graph",
    "compute_invariants",
    "connected_graphs",
    "cycle_graph",
    "decode_graph6",
    "distance_summary",
    "encode_graph6",
    "fastpath_benchmark",
    "format_edgelist",
    "generalized_closeness",
    "girth",
    "interval_from_order",
    "interval_from_size_diameter",
    "interval_triangle_quad_free",
    "interval_tree_or_high_girth",
    "is_connected",
    "labeled_trees",
    "parse_edgelist",
    "path_closeness_closed_form",
    "path_gc_closed_form",
    "path_graph",
    "pendant_tree",
    "pendant_tree_closed_forms",
    "pentagon_graph",
    "petersen_graph",
    "random_connected_graph",
    "reduced_zagreb_m2",
    "run_suite",
    "star_graph",
    "structural_flags",
    "tree_from_pruefer",
    "upper_bound_radius",
    "wiener_polarity",
    "zagreb_m1",
    "zagreb_m2",
]

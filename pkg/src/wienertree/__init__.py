"""Minimum-Wiener-index spanning trees and paths on planar point sets."""

from .errors import Infeasible, InternalError, InvalidInput, LimitExceeded
from .geometry import (
    Point,
    PointSet,
    convex_clockwise_order,
    distance,
    is_strictly_convex_position,
    segments_cross,
)
from .tree import (
    SpanningTree,
    WienerReport,
    complete_graph_wiener,
    crossing_pairs,
    delta_from,
    tree_weight,
    uncross,
    untangle,
    validate,
    wiener_edge_contribution,
    wiener_pairwise,
)
from .dp_convex import ConvexSolution, DPTables, dp_tables, reconstruct_tree, solve_convex
from .paths import HamiltonianPath, path_wiener, unit_path_wiener

__all__ = [
    "ConvexSolution",
    "DPTables",
    "HamiltonianPath",
    "Infeasible",
    "InternalError",
    "InvalidInput",
    "LimitExceeded",
    "Point",
    "PointSet",
    "SpanningTree",
    "WienerReport",
    "complete_graph_wiener",
    "convex_clockwise_order",
    "crossing_pairs",
    "delta_from",
    "distance",
    "dp_tables",
    "is_strictly_convex_position",
    "path_wiener",
    "reconstruct_tree",
    "segments_cross",
    "solve_convex",
    "tree_weight",
    "uncross",
    "unit_path_wiener",
    "untangle",
    "validate",
    "wiener_edge_contribution",
    "wiener_pairwise",
]

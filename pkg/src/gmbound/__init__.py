"""Complexity upper bounds for closed orientable prime graph manifolds.

A manifold is described by a decomposition graph: vertices carry Seifert
fibre data, directed edges carry normalized determinant -1 gluing matrices.
The package validates such graphs, evaluates the three bound formulas
(regular, tree, general) with full breakdowns and witnesses, and ships
brute-force oracles for every optimized computation.
"""

from .bounds import (
    DEFAULT_ASSIGNMENT_CAP,
    BoundReport,
    TheoremInapplicable,
    VertexTerms,
    best_bound,
    bound_general,
    bound_regular,
    bound_tree,
    f,
)
from .farey import (
    TAU_MINUS,
    TAU_PLUS,
    FareyTriangle,
    Slope,
    act,
    cf_sum,
    complexity_by_search,
    farey_distance,
    matrix_complexity,
    slope,
    triangle,
)
from .gl2 import H, IDENTITY, U, Gl2Matrix, compose, is_normalized, is_plus_minus_h, normalize, power_u
from .graph import (
    DecompositionGraph,
    DegreeStats,
    Edge,
    GraphFormatError,
    Violation,
    build_graph,
    degree_stats,
    graph_from_json,
    graph_to_json,
    is_valid,
    normalize_all,
    normalize_edge,
    validate,
)
from .oracle import LemmaReport, MinFResult, bruteforce_min_f, bruteforce_phi, verify_lemma
from .seifert import SeifertData, handle_count, validate_class_s
from .spanning import (
    DEFAULT_TREE_CAP,
    CapExceeded,
    SpanningTree,
    capital_phi,
    is_spanning_tree,
    iter_spanning_trees,
    optimal_trees,
    phi,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapExceeded",
    "DecompositionGraph",
    "DegreeStats",
    "Edge",
    "FareyTriangle",
    "Gl2Matrix",
    "GraphFormatError",
    "LemmaReport",
    "MinFResult",
    "SeifertData",
    "Slope",
    "SpanningTree",
    "TheoremInapplicable",
    "VertexTerms",
    "Violation",
    "H",
    "IDENTITY",
    "U",
    "TAU_MINUS",
    "TAU_PLUS",
    "DEFAULT_ASSIGNMENT_CAP",
    "DEFAULT_TREE_CAP",
    "act",
    "best_bound",
    "bound_general",
    "bound_regular",
    "bound_tree",
    "bruteforce_min_f",
    "bruteforce_phi",
    "build_graph",
    "capital_phi",
    "cf_sum",
    "complexity_by_search",
    "compose",
    "degree_stats",
    "f",
    "farey_distance",
    "graph_from_json",
    "graph_to_json",
    "handle_count",
    "is_normalized",
    "is_plus_minus_h",
    "is_spanning_tree",
    "is_valid",
    "iter_spanning_trees",
    "matrix_complexity",
    "normalize",
    "normalize_all",
    "normalize_edge",
    "optimal_trees",
    "phi",
    "power_u",
    "slope",
    "triangle",
    "validate",
    "validate_class_s",
    "verify_lemma",
]

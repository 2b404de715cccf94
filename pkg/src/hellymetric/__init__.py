"""Exact metric analysis of Helly graphs: hyperbolicity, interval thinness,
grid obstruction detection with certified materialization, power-graph
characterizations, and injective hulls at desk scale.

All hyperbolicity values are exact half-integers (HalfInt); nothing in the
package computes with floats.
"""
from .detect import (
    InternalInconsistencyError,
    MaterializeError,
    NotHellyError,
    ObstructionWitness,
    detect_H1,
    detect_H1_or_H3,
    detect_H2,
    half_hyperbolic_equivalents,
    hb_by_obstructions,
    hb_by_thinness,
    materialize,
    power_characterization,
    resolve_window_quadruple,
)
from .distances import DistanceMatrix, apsp, graph_power, is_isometric
from .embedding import contains_isometric, find_isometric_embedding
from .families import (
    FamilyGraph,
    FamilyValidationError,
    build_obstruction,
    expected_corner_pattern,
    family_cells,
    family_hyperbolicity,
    family_size,
    validate_family,
)
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    king_grid,
    load_graph,
    path_graph,
    random_connected_graph,
    strong_product,
    to_edge_list,
)
from .halfint import HalfInt
from .helly import (
    DiskConstraint,
    EnumerationBudgetError,
    HellyCheck,
    MedianResult,
    MedianSearchError,
    PseudoModularCheck,
    find_median,
    helly_bruteforce,
    is_helly,
    is_pseudo_modular,
    pick_common_vertex,
)
from .hull import (
    HullBudgetError,
    HullResult,
    extremal_functions,
    hull,
    hull_validate,
)
from .hyperbolicity import (
    HyperbolicityWitness,
    ThinnessWitness,
    hyperbolicity,
    interval_slice,
    interval_thinness,
)
from .report import (
    AnalysisReport,
    ClaimResult,
    build_analysis,
    report_to_dict,
    verify_claims,
)

__version__ = "1.0.0"

__all__ = [
    "AnalysisReport",
    "ClaimResult",
    "DiskConstraint",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "EnumerationBudgetError",
    "FamilyGraph",
    "FamilyValidationError",
    "Graph",
    "GraphError",
    "HalfInt",
    "HellyCheck",
    "HullBudgetError",
    "HullResult",
    "HyperbolicityWitness",
    "InternalInconsistencyError",
    "MaterializeError",
    "MedianResult",
    "MedianSearchError",
    "NotHellyError",
    "ObstructionWitness",
    "PseudoModularCheck",
    "ThinnessWitness",
    "apsp",
    "build_analysis",
    "build_obstruction",
    "complete_graph",
    "contains_isometric",
    "cycle_graph",
    "detect_H1",
    "detect_H1_or_H3",
    "detect_H2",
    "expected_corner_pattern",
    "extremal_functions",
    "family_cells",
    "family_hyperbolicity",
    "family_size",
    "find_isometric_embedding",
    "find_median",
    "graph_power",
    "half_hyperbolic_equivalents",
    "hb_by_obstructions",
    "hb_by_thinness",
    "helly_bruteforce",
    "hull",
    "hull_validate",
    "hyperbolicity",
    "induced_subgraph",
    "interval_slice",
    "interval_thinness",
    "is_helly",
    "is_isometric",
    "is_pseudo_modular",
    "king_grid",
    "load_graph",
    "materialize",
    "path_graph",
    "pick_common_vertex",
    "power_characterization",
    "random_connected_graph",
    "report_to_dict",
    "resolve_window_quadruple",
    "strong_product",
    "to_edge_list",
    "validate_family",
    "verify_claims",
]

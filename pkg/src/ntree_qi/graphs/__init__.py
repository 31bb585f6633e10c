"""Colored P/F graphs: validation, weak coverings, minimization, canonical forms."""

from ntree_qi.graphs.bisimulation import bisimilar, bisimilar_up_to_permutation, is_identity
from ntree_qi.graphs.canonical import canonical_form
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    GraphVertex,
    GraphViolation,
    VertexKind,
    dump_graph,
    f_vertex,
    graph_from_dict,
    graph_to_dict,
    p_vertex,
    parse_graph,
    path_graph,
    permute_colors,
    single_piece_graph,
    star_graph,
    to_dot,
    validate_graph,
)
from ntree_qi.graphs.covering import WeakCoveringMap, is_weak_covering
from ntree_qi.graphs.minimize import (
    MinimizationResult,
    VertexPartition,
    coarsest_stable_partition,
    is_minimal,
    minimize,
    quotient,
)

__all__ = [
    "ColoredGraph",
    "GraphVertex",
    "GraphViolation",
    "MinimizationResult",
    "VertexKind",
    "VertexPartition",
    "WeakCoveringMap",
    "bisimilar",
    "bisimilar_up_to_permutation",
    "canonical_form",
    "coarsest_stable_partition",
    "dump_graph",
    "f_vertex",
    "graph_from_dict",
    "graph_to_dict",
    "is_identity",
    "is_minimal",
    "is_weak_covering",
    "minimize",
    "p_vertex",
    "parse_graph",
    "path_graph",
    "permute_colors",
    "quotient",
    "single_piece_graph",
    "star_graph",
    "to_dot",
    "validate_graph",
]

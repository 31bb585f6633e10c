"""Simplicial complexes in T_n: parsing, certification, pieces, construction."""

from ntree_qi.complex.generate import check_options, generate_random, random_gamma_tree
from ntree_qi.complex.realize import piece_sizes, realize
from ntree_qi.complex.simplicial import (
    Simplex,
    SimplicialComplex,
    complex_from_dict,
    complex_to_dict,
    dump_complex,
    faces_of,
    one_skeleton,
    parse_complex,
)
from ntree_qi.complex.tn import (
    GluingTree,
    Piece,
    ReducibilityReport,
    VertexColoring,
    branch_locus,
    compute_coloring,
    compute_pieces,
    cone_vertices,
    decone,
    is_maximally_branched,
    is_minimally_branched,
    is_reducible,
    label_pieces,
    validate_tn,
)

__all__ = [
    "GluingTree",
    "Piece",
    "ReducibilityReport",
    "Simplex",
    "SimplicialComplex",
    "VertexColoring",
    "branch_locus",
    "check_options",
    "complex_from_dict",
    "complex_to_dict",
    "compute_coloring",
    "compute_pieces",
    "cone_vertices",
    "decone",
    "dump_complex",
    "faces_of",
    "generate_random",
    "is_maximally_branched",
    "is_minimally_branched",
    "is_reducible",
    "label_pieces",
    "one_skeleton",
    "parse_complex",
    "piece_sizes",
    "random_gamma_tree",
    "realize",
    "validate_tn",
]

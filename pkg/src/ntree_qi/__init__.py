"""
ntree-qi - Quasi-isometry classification of right-angled n-tree groups

From a simplicial complex K in T_n, computes the pieces, the labelled graph
Γ(K) and its minimal bisimilar quotient, decides quasi-isometry by
bisimilarity up to P-color permutation, and counts classes by piece number.
"""

from ntree_qi.config import Config
from ntree_qi.exceptions import (
    NTreeError,
    ComplexFormatError,
    GraphFormatError,
    NotInTnError,
    TnViolation,
    InvalidGraphError,
    WeakCoveringError,
    ClassificationError,
    UnsatisfiableOptionsError,
    StorageError,
)

# Complexes
from ntree_qi.complex import (
    SimplicialComplex,
    GluingTree,
    Piece,
    VertexColoring,
    parse_complex,
    dump_complex,
    validate_tn,
    compute_pieces,
    compute_coloring,
    cone_vertices,
    is_reducible,
    is_maximally_branched,
    realize,
    generate_random,
)

# Colored graphs
from ntree_qi.graphs import (
    ColoredGraph,
    VertexPartition,
    WeakCoveringMap,
    validate_graph,
    is_weak_covering,
    minimize,
    is_minimal,
    canonical_form,
    bisimilar,
    bisimilar_up_to_permutation,
)

# Classification and census
from ntree_qi.classify import (
    QiClass,
    QiVariant,
    QiCertificate,
    FamilyCertificate,
    gamma,
    qi_class,
    qi_equivalent,
    qi_equivalent_families,
)
from ntree_qi.census import CensusReport, census, enumerate_gamma_trees

__version__ = "0.1.0"

__all__ = [
    "Config",
    # Exceptions
    "NTreeError",
    "ComplexFormatError",
    "GraphFormatError",
    "NotInTnError",
    "TnViolation",
    "InvalidGraphError",
    "WeakCoveringError",
    "ClassificationError",
    "UnsatisfiableOptionsError",
    "StorageError",
    # Complexes
    "SimplicialComplex",
    "GluingTree",
    "Piece",
    "VertexColoring",
    "parse_complex",
    "dump_complex",
    "validate_tn",
    "compute_pieces",
    "compute_coloring",
    "cone_vertices",
    "is_reducible",
    "is_maximally_branched",
    "realize",
    "generate_random",
    # Colored graphs
    "ColoredGraph",
    "VertexPartition",
    "WeakCoveringMap",
    "validate_graph",
    "is_weak_covering",
    "minimize",
    "is_minimal",
    "canonical_form",
    "bisimilar",
    "bisimilar_up_to_permutation",
    # Classification and census
    "QiClass",
    "QiVariant",
    "QiCertificate",
    "FamilyCertificate",
    "gamma",
    "qi_class",
    "qi_equivalent",
    "qi_equivalent_families",
    "CensusReport",
    "census",
    "enumerate_gamma_trees",
]

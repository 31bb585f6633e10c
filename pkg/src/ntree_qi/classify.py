"""
Classification Module

Builds the labelled graph Γ(K) of a complex in T_n and decides quasi-isometry:
two groups are quasi-isometric iff their graphs are bisimilar after possibly
reordering the P-colors. Families of complexes (free products) are compared
as sets of classes.
"""

import base64
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ntree_qi.complex.simplicial import SimplicialComplex
from ntree_qi.complex.tn import (
    GluingTree,
    VertexColoring,
    compute_coloring,
    compute_pieces,
    is_maximally_branched,
    is_reducible,
    label_pieces,
    validate_tn,
)
from ntree_qi.exceptions import ClassificationError, InvalidGraphError
from ntree_qi.graphs.bisimulation import bisimilar, bisimilar_up_to_permutation, is_identity
from ntree_qi.graphs.canonical import canonical_form
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    f_vertex,
    graph_to_dict,
    p_vertex,
    validate_graph,
)
from ntree_qi.graphs.minimize import minimize


logger = logging.getLogger(__name__)


def _vertex_id(tag: str, simplex: Sequence[str]) -> str:
    # injective for arbitrary vertex names
    return tag + json.dumps(list(simplex), separators=(",", ":"))


def gamma(
    complex_: SimplicialComplex,
    tree: Optional[GluingTree] = None,
    coloring: Optional[VertexColoring] = None,
) -> ColoredGraph:
    """
    The labelled graph Γ(K).

    One P-vertex per piece, colored by the color missing from its spine, and
    one F-vertex per simplex lying in two or more pieces, joined to the pieces
    containing it. Vertex ids are "P" and "F" followed by the JSON array of
    the spine or simplex, e.g. P["a","b"].

    Raises:
        NotInTnError: If K is not in T_n.
        ClassificationError: If K is a single simplex (no pieces).
    """
    tree = tree or validate_tn(complex_)
    if len(complex_) == 1:
        raise ClassificationError("a single simplex has no pieces; its class is abelian")
    coloring = coloring or compute_coloring(complex_, tree)

    pieces = label_pieces(compute_pieces(complex_, tree), coloring)
    containing: Dict[Tuple[str, ...], List[str]] = {}
    vertices = []
    for piece in pieces:
        piece_id = _vertex_id("P", piece.spine)
        vertices.append(p_vertex(piece_id, piece.label))
        for simplex in piece.members:
            containing.setdefault(simplex, []).append(piece_id)

    edges = []
    for simplex, piece_ids in sorted(containing.items()):
        if len(piece_ids) < 2:
            continue
        simplex_id = _vertex_id("F", simplex)
        vertices.append(f_vertex(simplex_id))
        edges.extend((simplex_id, piece_id) for piece_id in piece_ids)

    graph = ColoredGraph.build(complex_.dimension, vertices, edges)
    logger.debug(f"Γ(K): {len(graph.p_vertices)} P, {len(graph.f_vertices)} F")
    return graph


class QiVariant(Enum):
    ABELIAN = "abelian"
    GRAPH = "graph"


@dataclass(frozen=True)
class QiClass:
    """
    Complete quasi-isometry invariant of a complex in T_n.

    Equality and hashing use dimension, variant and canonical payload only;
    the remaining fields are metadata.
    """

    dimension: int
    variant: QiVariant
    canonical: bytes = b""
    reducible: bool = field(default=False, compare=False)
    maximally_branched: bool = field(default=False, compare=False)
    colors_used: int = field(default=0, compare=False)
    minimal_graph: Optional[ColoredGraph] = field(default=None, compare=False, repr=False)

    @property
    def sort_key(self) -> Tuple[int, str, bytes]:
        return (self.dimension, self.variant.value, self.canonical)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "variant": self.variant.value,
            "canonical": base64.b64encode(self.canonical).decode("ascii"),
            "reducible": self.reducible,
            "maximally_branched": self.maximally_branched,
            "colors_used": self.colors_used,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "QiClass":
        try:
            return cls(
                dimension=data["dimension"],
                variant=QiVariant(data["variant"]),
                canonical=base64.b64decode(data["canonical"]),
                reducible=data["reducible"],
                maximally_branched=data["maximally_branched"],
                colors_used=data["colors_used"],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ClassificationError(f"malformed class JSON: {e}") from e

    @classmethod
    def from_json(cls, text: str) -> "QiClass":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ClassificationError(f"malformed class JSON: {e}") from e
        return cls.from_dict(data)


def qi_class(complex_: SimplicialComplex) -> QiClass:
    """
    Quasi-isometry class of a complex.

    Raises:
        NotInTnError: If K is not in T_n.
    """
    tree = validate_tn(complex_)
    n = complex_.dimension
    if len(complex_) == 1:
        return QiClass(dimension=n, variant=QiVariant.ABELIAN, reducible=True)

    coloring = compute_coloring(complex_, tree)
    graph = gamma(complex_, tree, coloring)
    minimal = minimize(graph).graph
    return QiClass(
        dimension=n,
        variant=QiVariant.GRAPH,
        canonical=canonical_form(minimal, mod_color_permutation=True),
        reducible=is_reducible(complex_, tree, coloring, graph).reducible,
        maximally_branched=is_maximally_branched(complex_, tree),
        colors_used=len(graph.colors_used),
        minimal_graph=minimal,
    )


@dataclass(frozen=True)
class QiCertificate:
    """Outcome of a quasi-isometry decision, with its evidence."""
    equivalent: bool
    reason: str
    permutation: Optional[Dict[int, int]] = None
    minimal: Tuple[Optional[ColoredGraph], Optional[ColoredGraph]] = (None, None)

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "reason": self.reason,
            "permutation": (
                {str(c): image for c, image in self.permutation.items()}
                if self.permutation is not None else None
            ),
            "minimal": [graph_to_dict(g) if g is not None else None for g in self.minimal],
        }


def compare_graphs(
    first: ColoredGraph,
    second: ColoredGraph,
    allow_permutation: bool = True,
) -> QiCertificate:
    """
    Decide bisimilarity of two labelled graphs, optionally up to recoloring.

    Raises:
        InvalidGraphError: If either graph violates the class constraints.
    """
    for graph in (first, second):
        violations = validate_graph(graph)
        if violations:
            raise InvalidGraphError(violations)

    if first.n != second.n:
        return QiCertificate(False, f"dimensions differ (n={first.n} vs n={second.n})")

    minimal = (minimize(first).graph, minimize(second).graph)
    if not allow_permutation:
        if bisimilar(first, second):
            identity = {c: c for c in range(1, first.n + 2)}
            return QiCertificate(True, "bisimilar via identity permutation", identity, minimal)
        return QiCertificate(False, "not bisimilar", None, minimal)

    sigma = bisimilar_up_to_permutation(first, second)
    if sigma is None:
        return QiCertificate(False, "not bisimilar up to color permutation", None, minimal)
    if is_identity(sigma):
        reason = "bisimilar via identity permutation"
    else:
        moved = ", ".join(f"{c}->{image}" for c, image in sigma.items() if c != image)
        reason = f"bisimilar via permutation {moved}"
    return QiCertificate(True, reason, sigma, minimal)


def qi_equivalent(
    first: SimplicialComplex,
    second: SimplicialComplex,
    allow_permutation: bool = True,
) -> QiCertificate:
    """
    Decide whether two right-angled n-tree groups are quasi-isometric.

    Complexes of different dimension are never equivalent. Two single
    simplices of equal dimension are; a single simplex and anything else are not.

    Raises:
        NotInTnError: If either complex is not in T_n.
    """
    classes = (qi_class(first), qi_class(second))
    if first.dimension != second.dimension:
        return QiCertificate(False, f"dimensions differ (n={first.dimension} vs n={second.dimension})")

    abelian = [c.variant is QiVariant.ABELIAN for c in classes]
    if all(abelian):
        return QiCertificate(True, "both abelian", {c: c for c in range(1, first.dimension + 2)})
    if any(abelian):
        return QiCertificate(
            False, "exactly one side is abelian", None,
            (classes[0].minimal_graph, classes[1].minimal_graph),
        )

    return compare_graphs(classes[0].minimal_graph, classes[1].minimal_graph, allow_permutation)


@dataclass(frozen=True)
class FamilyCertificate:
    """Outcome of comparing two families of complexes by their class sets."""
    equivalent: bool
    left: FrozenSet[QiClass]
    right: FrozenSet[QiClass]
    unmatched_left: FrozenSet[QiClass]
    unmatched_right: FrozenSet[QiClass]
    single_component: bool

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> dict:
        def dump(classes: Iterable[QiClass]) -> List[dict]:
            return [c.to_dict() for c in sorted(classes, key=lambda c: c.sort_key)]

        return {
            "equivalent": self.equivalent,
            "left": dump(self.left),
            "right": dump(self.right),
            "unmatched_left": dump(self.unmatched_left),
            "unmatched_right": dump(self.unmatched_right),
            "single_component": self.single_component,
        }


def qi_equivalent_families(
    first: Sequence[SimplicialComplex],
    second: Sequence[SimplicialComplex],
) -> FamilyCertificate:
    """
    Compare free products of right-angled n-tree groups.

    Every component on each side must have a quasi-isometric partner of the
    same dimension on the other side; multiplicities are ignored. The
    certificate flags families in which either side has a single component.

    Raises:
        ClassificationError: If either family is empty.
        NotInTnError: If any component is not in T_n.
    """
    if not first or not second:
        raise ClassificationError("families must be nonempty")

    left = frozenset(qi_class(k) for k in first)
    right = frozenset(qi_class(k) for k in second)
    single = len(first) == 1 or len(second) == 1
    if single:
        logger.info("Comparing a family with a single component")

    return FamilyCertificate(
        equivalent=left == right,
        left=left,
        right=right,
        unmatched_left=left - right,
        unmatched_right=right - left,
        single_component=single,
    )

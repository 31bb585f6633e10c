"""
T_n Membership Module

Certifies that a complex lies in T_n via its gluing tree, and derives the
structure the classification needs from that certificate: pieces, the
canonical vertex coloring, reducibility and branching predicates.
"""

import logging
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ntree_qi.complex.simplicial import Simplex, SimplicialComplex, one_skeleton
from ntree_qi.exceptions import ClassificationError, NotInTnError, TnViolation
from ntree_qi.graphs.colored_graph import ColoredGraph


logger = logging.getLogger(__name__)

# Node tags in the incidence graph
SIMPLEX_NODE = "simplex"
FACE_NODE = "face"


@dataclass(frozen=True)
class GluingTree:
    """
    Incidence tree of n-simplices and shared (n-1)-faces.

    Edges are (simplex, face) pairs. A single simplex gives one simplex-node
    and no face-nodes.
    """

    simplices: Tuple[Simplex, ...]
    faces: Tuple[Simplex, ...]
    edges: Tuple[Tuple[Simplex, Simplex], ...]

    @cached_property
    def graph(self) -> nx.Graph:
        """networkx view; nodes are ("simplex", s) and ("face", f) tuples."""
        return _incidence_graph(self.simplices, self.faces, self.edges)

    @cached_property
    def members(self) -> Dict[Simplex, Tuple[Simplex, ...]]:
        """Simplices on each face-node, sorted."""
        members: Dict[Simplex, List[Simplex]] = {face: [] for face in self.faces}
        for simplex, face in self.edges:
            members[face].append(simplex)
        return {face: tuple(sorted(m)) for face, m in members.items()}

    @cached_property
    def shared_face_count(self) -> Dict[Simplex, int]:
        """Number of shared faces on each simplex."""
        counts = {simplex: 0 for simplex in self.simplices}
        for simplex, _ in self.edges:
            counts[simplex] += 1
        return counts

    def to_dict(self) -> dict:
        """JSON-ready summary used by `validate`."""
        return {
            "valid": True,
            "simplex_nodes": len(self.simplices),
            "face_nodes": len(self.faces),
            "edges": len(self.edges),
            "faces": [
                {"face": list(face), "simplices": [list(s) for s in self.members[face]]}
                for face in self.faces
            ],
        }


@dataclass(frozen=True)
class VertexColoring:
    """Proper (n+1)-coloring of the vertices of K."""
    assignment: Mapping[str, int]

    def __getitem__(self, vertex: str) -> int:
        return self.assignment[vertex]

    def colors_of(self, simplex: Sequence[str]) -> Tuple[int, ...]:
        return tuple(self.assignment[v] for v in simplex)

    def missing_color(self, face: Sequence[str]) -> int:
        """The single color of {1..len(face)+1} that the face does not use."""
        present = set(self.colors_of(face))
        return next(c for c in range(1, len(face) + 2) if c not in present)

    def is_proper_on(self, simplex: Sequence[str]) -> bool:
        return sorted(self.colors_of(simplex)) == list(range(1, len(simplex) + 1))

    def as_dict(self) -> Dict[str, int]:
        return {v: self.assignment[v] for v in sorted(self.assignment)}


@dataclass(frozen=True)
class Piece:
    """
    Star of a shared (n-1)-face.

    The group of a piece is F_k x Z^n with k = free_rank, the number of member
    simplices.
    """

    spine: Simplex
    members: Tuple[Simplex, ...]
    label: Optional[int] = None

    @property
    def free_rank(self) -> int:
        return len(self.members)

    @property
    def tips(self) -> Tuple[str, ...]:
        """Off-spine vertices, one per member simplex, sorted."""
        spine = set(self.spine)
        return tuple(sorted(v for simplex in self.members for v in simplex if v not in spine))


@dataclass(frozen=True)
class ReducibilityReport:
    """Color-count reducibility decision with the cone-vertex witness."""
    reducible: bool
    colors_used: Tuple[int, ...]
    cone_vertices: Tuple[str, ...]

    def __bool__(self) -> bool:
        return self.reducible

    @property
    def agrees_with_cone_test(self) -> bool:
        return self.reducible == bool(self.cone_vertices)


def _incidence_graph(simplices, faces, edges) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((SIMPLEX_NODE, s) for s in simplices)
    graph.add_nodes_from((FACE_NODE, f) for f in faces)
    graph.add_edges_from(((SIMPLEX_NODE, s), (FACE_NODE, f)) for s, f in edges)
    return graph


def _gluing_data(complex_: SimplicialComplex) -> GluingTree:
    faces = tuple(complex_.shared_faces)
    edges = tuple(
        (simplex, face) for face in faces for simplex in complex_.face_index[face]
    )
    return GluingTree(simplices=complex_.simplices, faces=faces, edges=edges)


def _propagate(
    complex_: SimplicialComplex, tree: GluingTree
) -> Tuple[Dict[str, int], List[Tuple[Simplex, str]]]:
    """
    Breadth-first color propagation over the gluing tree.

    Returns the coloring and the (simplex, vertex) pairs where a simplex's
    off-face vertex had already been reached through another simplex.

    Raises:
        NotInTnError: UNCOLORABLE on a color conflict.
    """
    seed = complex_.simplices[0]
    colors = {v: i + 1 for i, v in enumerate(seed)}
    repeats: List[Tuple[Simplex, str]] = []

    for parent, child in nx.bfs_edges(tree.graph, (SIMPLEX_NODE, seed)):
        if child[0] != SIMPLEX_NODE:
            continue
        face, simplex = parent[1], child[1]
        vertex = next(v for v in simplex if v not in face)
        present = {colors[v] for v in face}
        color = next(c for c in range(1, len(simplex) + 1) if c not in present)

        if vertex in colors:
            if colors[vertex] != color:
                raise NotInTnError(
                    TnViolation.UNCOLORABLE,
                    f"vertex {vertex!r} needs colors {colors[vertex]} and {color}",
                    {"vertex": vertex, "colors": sorted((colors[vertex], color)),
                     "simplex": list(simplex)},
                )
            repeats.append((simplex, vertex))
            continue
        colors[vertex] = color

    logger.debug(f"Propagated {len(set(colors.values()))} colors to {len(colors)} vertices")
    return colors, repeats


def validate_tn(complex_: SimplicialComplex) -> GluingTree:
    """
    Certify membership in T_n.

    Checks, in order: the incidence graph is connected, it is acyclic, color
    propagation is consistent, and every glued simplex brings exactly one new
    vertex (|V| = n + #simplices).

    Raises:
        NotInTnError: With kind DISCONNECTED, CYCLIC, UNCOLORABLE or PINCHED
            and a certificate naming the offending simplices.
    """
    tree = _gluing_data(complex_)
    graph = tree.graph

    if not nx.is_connected(graph):
        components = sorted(
            sorted(list(node[1]) for node in component if node[0] == SIMPLEX_NODE)
            for component in nx.connected_components(graph)
        )
        raise NotInTnError(
            TnViolation.DISCONNECTED,
            f"gluing graph has {len(components)} components",
            {"components": components},
        )

    if graph.number_of_edges() != graph.number_of_nodes() - 1:
        cycle = nx.find_cycle(graph, source=(SIMPLEX_NODE, complex_.simplices[0]))
        simplices = sorted({node[1] for edge in cycle for node in edge[:2] if node[0] == SIMPLEX_NODE})
        raise NotInTnError(
            TnViolation.CYCLIC,
            f"gluing graph contains a cycle through {len(simplices)} simplices",
            {"cycle": [list(s) for s in simplices]},
        )

    _, repeats = _propagate(complex_, tree)
    if repeats:
        simplex, vertex = repeats[0]
        raise NotInTnError(
            TnViolation.PINCHED,
            f"{len(complex_.vertices)} vertices, expected "
            f"{complex_.dimension + len(complex_)}; {vertex!r} is reused by {list(simplex)}",
            {"simplex": list(simplex), "vertex": vertex,
             "vertices": len(complex_.vertices),
             "expected": complex_.dimension + len(complex_)},
        )

    logger.debug(
        f"Complex in T_{complex_.dimension}: {len(tree.simplices)} simplices, "
        f"{len(tree.faces)} shared faces"
    )
    return tree


def compute_coloring(complex_: SimplicialComplex, tree: GluingTree) -> VertexColoring:
    """
    Canonical proper coloring.

    The lexicographically first simplex is colored 1..n+1 in name order and the
    colors are pushed across the gluing tree breadth first.
    """
    colors, _ = _propagate(complex_, tree)
    return VertexColoring(assignment=colors)


def compute_pieces(complex_: SimplicialComplex, tree: GluingTree) -> List[Piece]:
    """One unlabelled piece per shared face, sorted by spine."""
    return [Piece(spine=face, members=tree.members[face]) for face in tree.faces]


def label_pieces(pieces: Sequence[Piece], coloring: VertexColoring) -> List[Piece]:
    """Fill in each piece's label: the color missing from its spine."""
    return [replace(piece, label=coloring.missing_color(piece.spine)) for piece in pieces]


def cone_vertices(complex_: SimplicialComplex) -> List[str]:
    """Vertices adjacent to every other vertex in the 1-skeleton."""
    skeleton = one_skeleton(complex_)
    others = skeleton.number_of_nodes() - 1
    return sorted(v for v, degree in skeleton.degree() if degree == others)


def is_reducible(
    complex_: SimplicialComplex,
    tree: GluingTree,
    coloring: VertexColoring,
    graph: Optional[ColoredGraph] = None,
) -> ReducibilityReport:
    """
    K is reducible iff Γ(K) uses fewer than n+1 P-colors.

    Without a graph, the colors are read off the labelled pieces. A single
    simplex uses no colors and is reducible.
    """
    if graph is not None:
        colors = sorted(graph.colors_used)
    else:
        pieces = label_pieces(compute_pieces(complex_, tree), coloring)
        colors = sorted({piece.label for piece in pieces})

    return ReducibilityReport(
        reducible=len(colors) < complex_.dimension + 1,
        colors_used=tuple(colors),
        cone_vertices=tuple(cone_vertices(complex_)),
    )


def is_maximally_branched(complex_: SimplicialComplex, tree: GluingTree) -> bool:
    """Every simplex is glued along exactly one or along all of its faces."""
    allowed = (1, complex_.dimension + 1)
    return all(count in allowed for count in tree.shared_face_count.values())


def branch_locus(complex_: SimplicialComplex, tree: GluingTree) -> List[Simplex]:
    """Simplices lying in more than two pieces."""
    return [s for s in tree.simplices if tree.shared_face_count[s] > 2]


def is_minimally_branched(complex_: SimplicialComplex, tree: GluingTree) -> bool:
    return not branch_locus(complex_, tree)


def decone(
    complex_: SimplicialComplex, vertex: Optional[str] = None
) -> Tuple[str, SimplicialComplex]:
    """
    Split a cone K = v * K' into its apex and the link K'.

    Args:
        complex_: A reducible complex of dimension n >= 2.
        vertex: Apex to use; defaults to the first cone vertex.

    Returns:
        (apex, link) with the link of dimension n-1.

    Raises:
        ClassificationError: If n = 1, or there is no such cone vertex.
    """
    if complex_.dimension < 2:
        raise ClassificationError("the link of a vertex in a 1-complex is not a complex")

    cones = cone_vertices(complex_)
    if vertex is None:
        if not cones:
            raise ClassificationError("complex has no cone vertex")
        vertex = cones[0]
    elif vertex not in cones:
        raise ClassificationError(f"{vertex!r} is not a cone vertex")

    outside = [s for s in complex_.simplices if vertex not in s]
    if outside:
        raise ClassificationError(f"{vertex!r} misses the simplex {list(outside[0])}")

    link = SimplicialComplex.from_simplices(
        complex_.dimension - 1,
        ([v for v in simplex if v != vertex] for simplex in complex_.simplices),
    )
    return vertex, link


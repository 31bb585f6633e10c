"""
Realization Module

Builds a complex in T_n whose labelled graph is a given colored tree.
"""

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from networkx.utils import UnionFind

from ntree_qi.complex.simplicial import SimplicialComplex
from ntree_qi.exceptions import GraphFormatError, InvalidGraphError
from ntree_qi.graphs.colored_graph import ColoredGraph, GraphViolation, VertexKind, validate_graph


logger = logging.getLogger(__name__)

# (role, graph vertex id, color); role is "F" for simplex corners,
# "P" for spine corners, "T" for padding tips
RawVertex = Tuple[str, str, int]


def realize(
    tree: ColoredGraph,
    n: Optional[int] = None,
    extra_tips: Optional[Mapping[str, int]] = None,
) -> SimplicialComplex:
    """
    Realize a colored tree as a complex.

    Every F-vertex becomes an n-simplex colored 1..n+1 and every P-vertex of
    color c a spine colored {1..n+1} minus c. Along each tree edge the spine is
    identified with the face of the simplex missing color c. Pieces are padded
    with fresh tips to at least two members.

    Vertex names are "<color>.<index>" with a zero-padded color, so sorting the
    names of any simplex sorts it by color and compute_coloring returns the
    exact colors of the tree.

    Args:
        tree: A valid colored tree.
        n: Dimension; must match tree.n when given.
        extra_tips: Additional padding simplices per P-vertex id.

    Raises:
        InvalidGraphError: If the graph is invalid or not a tree.
        GraphFormatError: If n disagrees with the graph.
    """
    if n is not None and n != tree.n:
        raise GraphFormatError(f"graph is for dimension {tree.n}, not {n}")
    n = tree.n

    violations = validate_graph(tree)
    if not violations and not tree.is_tree():
        violations = [GraphViolation("not_tree", "graph is not a tree")]
    if violations:
        raise InvalidGraphError(violations)

    extra_tips = extra_tips or {}
    colors = range(1, n + 2)
    simplices: List[List[RawVertex]] = [
        [("F", v.id, c) for c in colors] for v in tree.f_vertices
    ]
    glue: List[Tuple[RawVertex, RawVertex]] = []

    for v in tree.p_vertices:
        spine = [("P", v.id, d) for d in colors if d != v.color]
        for f_id in tree.neighbors(v.id):
            glue.extend((("P", v.id, d), ("F", f_id, d)) for d in colors if d != v.color)
        tips = max(0, 2 - tree.degree(v.id)) + extra_tips.get(v.id, 0)
        for i in range(tips):
            simplices.append(spine + [("T", f"{v.id}#{i}", v.color)])

    classes = UnionFind(raw for simplex in simplices for raw in simplex)
    for a, b in glue:
        classes.union(a, b)

    names = _name_classes(classes, n)
    complex_ = SimplicialComplex.from_simplices(
        n, ([names[classes[raw]] for raw in simplex] for simplex in simplices)
    )
    logger.debug(
        f"Realized {len(tree.p_vertices)} P / {len(tree.f_vertices)} F as "
        f"{len(complex_)} simplices on {len(complex_.vertices)} vertices"
    )
    return complex_


def _name_classes(classes: UnionFind, n: int) -> Dict[RawVertex, str]:
    """Name each class "<color>.<k>", numbering per color in order of least member."""
    least: Dict[RawVertex, RawVertex] = {}
    for members in classes.to_sets():
        least[classes[next(iter(members))]] = min(members)

    width = len(str(n + 1))
    counters = {c: 0 for c in range(1, n + 2)}
    names: Dict[RawVertex, str] = {}
    for root, first in sorted(least.items(), key=lambda item: item[1]):
        color = first[2]
        names[root] = f"{color:0{width}d}.{counters[color]}"
        counters[color] += 1
    return names


def piece_sizes(tree: ColoredGraph, extra_tips: Optional[Mapping[str, int]] = None) -> Dict[str, int]:
    """Member simplex count of each piece realize() will build."""
    extra_tips = extra_tips or {}
    return {
        v.id: max(2, tree.degree(v.id)) + extra_tips.get(v.id, 0)
        for v in tree.vertices
        if v.kind is VertexKind.P
    }

"""
Colored Graph Module

Bipartite P/F graphs whose P-vertices carry a color in {1..n+1}.
These are the Γ(K) graphs and everything bisimilarity produces from them.
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ntree_qi.exceptions import GraphFormatError


logger = logging.getLogger(__name__)


class VertexKind(Enum):
    """P-vertices stand for pieces, F-vertices for simplices in several pieces."""
    P = "P"
    F = "F"


@dataclass(frozen=True)
class GraphVertex:
    """A vertex of a colored graph. Only P-vertices have a color."""
    id: str
    kind: VertexKind
    color: Optional[int] = None

    @property
    def label(self) -> str:
        """Display label: "P<color>" or "F"."""
        return f"P{self.color}" if self.kind is VertexKind.P else "F"

    @property
    def label_key(self) -> int:
        """Integer form of the label; F sorts before every P color."""
        return self.color if self.kind is VertexKind.P else 0


@dataclass(frozen=True)
class GraphViolation:
    """One violated class constraint, reported as data."""
    code: str
    message: str
    subject: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class ColoredGraph:
    """
    A simple P/F colored graph in ambient dimension n.

    Vertices are sorted by id and edges are stored as sorted id pairs, so two
    graphs built from the same data compare equal regardless of input order.
    """

    n: int
    vertices: Tuple[GraphVertex, ...]
    edges: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise GraphFormatError(f"n must be an integer >= 1, got {self.n!r}")

        vertices = tuple(sorted(self.vertices, key=lambda v: v.id))
        ids = [v.id for v in vertices]
        if len(set(ids)) != len(ids):
            raise GraphFormatError("duplicate vertex ids")
        for v in vertices:
            if v.kind is VertexKind.P and not isinstance(v.color, int):
                raise GraphFormatError(f"P-vertex {v.id!r} needs an integer color")
            if v.kind is VertexKind.F and v.color is not None:
                raise GraphFormatError(f"F-vertex {v.id!r} must not carry a color")

        known = set(ids)
        edges = set()
        for a, b in self.edges:
            if a not in known or b not in known:
                raise GraphFormatError(f"edge ({a!r}, {b!r}) references an unknown vertex")
            if a == b:
                raise GraphFormatError(f"self-loop at {a!r}")
            edges.add((a, b) if a < b else (b, a))

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @classmethod
    def build(
        cls,
        n: int,
        vertices: Iterable[GraphVertex],
        edges: Iterable[Sequence[str]],
    ) -> "ColoredGraph":
        """Build a graph from any iterables; duplicate edges collapse."""
        return cls(n=n, vertices=tuple(vertices), edges=tuple(tuple(e) for e in edges))

    @cached_property
    def _by_id(self) -> Dict[str, GraphVertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def adjacency(self) -> Dict[str, Tuple[str, ...]]:
        """Sorted neighbor ids for every vertex."""
        adjacency: Dict[str, List[str]] = {v.id: [] for v in self.vertices}
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adjacency.items()}

    @cached_property
    def edge_set(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    def vertex(self, vertex_id: str) -> GraphVertex:
        return self._by_id[vertex_id]

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._by_id

    def has_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edge_set

    def neighbors(self, vertex_id: str) -> Tuple[str, ...]:
        return self.adjacency[vertex_id]

    def degree(self, vertex_id: str) -> int:
        return len(self.adjacency[vertex_id])

    @property
    def ids(self) -> List[str]:
        return [v.id for v in self.vertices]

    @property
    def p_vertices(self) -> List[GraphVertex]:
        return [v for v in self.vertices if v.kind is VertexKind.P]

    @property
    def f_vertices(self) -> List[GraphVertex]:
        return [v for v in self.vertices if v.kind is VertexKind.F]

    @property
    def colors_used(self) -> FrozenSet[int]:
        """P-colors that actually occur."""
        return frozenset(v.color for v in self.p_vertices)

    def to_networkx(self) -> nx.Graph:
        """networkx view with "kind" and "color" node attributes."""
        graph = nx.Graph()
        for v in self.vertices:
            graph.add_node(v.id, kind=v.kind.value, color=v.color)
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return bool(self.vertices) and nx.is_tree(self.to_networkx())

    def __len__(self) -> int:
        return len(self.vertices)


def p_vertex(vertex_id: str, color: int) -> GraphVertex:
    return GraphVertex(id=vertex_id, kind=VertexKind.P, color=color)


def f_vertex(vertex_id: str) -> GraphVertex:
    return GraphVertex(id=vertex_id, kind=VertexKind.F)


def validate_graph(graph: ColoredGraph) -> List[GraphViolation]:
    """
    Check the P/F class constraints.

    Returns every violation found (an empty list means the graph is valid):
    colors outside {1..n+1}, non-bipartite edges, F-vertices of degree
    outside [2, n+1], repeated P-colors around an F-vertex, disconnection,
    and the empty graph.
    """
    violations: List[GraphViolation] = []
    top = graph.n + 1

    if not graph.vertices:
        return [GraphViolation("empty", "graph has no vertices")]

    for v in graph.p_vertices:
        if not 1 <= v.color <= top:
            violations.append(GraphViolation(
                "color_out_of_range",
                f"P-vertex {v.id!r} has color {v.color} outside 1..{top}",
                (v.id,),
            ))

    for a, b in graph.edges:
        if graph.vertex(a).kind is graph.vertex(b).kind:
            violations.append(GraphViolation(
                "not_bipartite",
                f"edge ({a!r}, {b!r}) joins two {graph.vertex(a).kind.value}-vertices",
                (a, b),
            ))

    for v in graph.f_vertices:
        degree = graph.degree(v.id)
        if degree < 2:
            violations.append(GraphViolation(
                "f_degree_low", f"F degree < 2 at {v.id!r} (degree {degree})", (v.id,)
            ))
        if degree > top:
            violations.append(GraphViolation(
                "f_degree_high", f"F degree > {top} at {v.id!r} (degree {degree})", (v.id,)
            ))
        colors = [graph.vertex(u).color for u in graph.neighbors(v.id)
                  if graph.vertex(u).kind is VertexKind.P]
        repeated = sorted({c for c in colors if colors.count(c) > 1})
        if repeated:
            violations.append(GraphViolation(
                "repeated_color",
                f"repeated P-color at F {v.id!r}: {repeated}",
                (v.id,),
            ))

    if not graph.is_connected():
        violations.append(GraphViolation("disconnected", "graph is not connected"))

    return violations


def permute_colors(graph: ColoredGraph, sigma: Mapping[int, int]) -> ColoredGraph:
    """Recolor every P-vertex c -> sigma[c] (colors missing from sigma are kept)."""
    vertices = [
        p_vertex(v.id, sigma.get(v.color, v.color)) if v.kind is VertexKind.P else v
        for v in graph.vertices
    ]
    return ColoredGraph.build(graph.n, vertices, graph.edges)


def path_graph(n: int, colors: Sequence[int], prefix: str = "") -> ColoredGraph:
    """Alternating path P-F-P-...-P with the given P colors."""
    vertices = [p_vertex(f"{prefix}p{i}", c) for i, c in enumerate(colors)]
    edges = []
    for i in range(len(colors) - 1):
        f_id = f"{prefix}f{i}"
        vertices.append(f_vertex(f_id))
        edges += [(f"{prefix}p{i}", f_id), (f_id, f"{prefix}p{i + 1}")]
    return ColoredGraph.build(n, vertices, edges)


def star_graph(n: int, colors: Sequence[int], prefix: str = "") -> ColoredGraph:
    """A single F-vertex joined to one P-vertex per given color."""
    vertices = [f_vertex(f"{prefix}f")] + [p_vertex(f"{prefix}p{i}", c) for i, c in enumerate(colors)]
    edges = [(f"{prefix}f", f"{prefix}p{i}") for i in range(len(colors))]
    return ColoredGraph.build(n, vertices, edges)


def single_piece_graph(n: int, color: int, vertex_id: str = "p") -> ColoredGraph:
    return ColoredGraph.build(n, [p_vertex(vertex_id, color)], [])


# -- JSON / DOT --------------------------------------------------------------

def graph_from_dict(data: object) -> ColoredGraph:
    """Build a graph from already-decoded graph JSON."""
    if not isinstance(data, dict) or not {"n", "vertices", "edges"} <= set(data):
        raise GraphFormatError('graph JSON must be an object with "n", "vertices", "edges"')
    if not isinstance(data["vertices"], list) or not isinstance(data["edges"], list):
        raise GraphFormatError('"vertices" and "edges" must be lists')

    vertices = []
    for entry in data["vertices"]:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise GraphFormatError(f"bad vertex entry {entry!r}")
        kind = entry.get("kind")
        if kind == "P":
            color = entry.get("color")
            if not isinstance(color, int) or isinstance(color, bool):
                raise GraphFormatError(f"P-vertex {entry['id']!r} needs an integer color")
            vertices.append(p_vertex(entry["id"], color))
        elif kind == "F":
            if "color" in entry:
                raise GraphFormatError(f"F-vertex {entry['id']!r} must not carry a color")
            vertices.append(f_vertex(entry["id"]))
        else:
            raise GraphFormatError(f"vertex kind must be \"P\" or \"F\", got {kind!r}")

    edges = []
    for entry in data["edges"]:
        if not (isinstance(entry, list) and len(entry) == 2 and all(isinstance(x, str) for x in entry)):
            raise GraphFormatError(f"bad edge entry {entry!r}")
        edges.append(tuple(entry))

    return ColoredGraph.build(data["n"], vertices, edges)


def graph_to_dict(graph: ColoredGraph) -> dict:
    """JSON-ready representation; keys in the order n, vertices, edges."""
    vertices = []
    for v in graph.vertices:
        entry = {"id": v.id, "kind": v.kind.value}
        if v.kind is VertexKind.P:
            entry["color"] = v.color
        vertices.append(entry)
    return {
        "n": graph.n,
        "vertices": vertices,
        "edges": [list(e) for e in graph.edges],
    }


def parse_graph(text: str) -> ColoredGraph:
    """
    Parse the graph JSON format.

    Raises:
        GraphFormatError: On malformed JSON or structural errors.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"malformed graph JSON: {e}") from e
    return graph_from_dict(data)


def dump_graph(graph: ColoredGraph) -> str:
    return json.dumps(graph_to_dict(graph))


def _dot_quote(text: str) -> str:
    """Double-quoted DOT ID with backslashes and quotes escaped."""
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: ColoredGraph, name: str = "gamma") -> str:
    """
    DOT rendering for visual inspection.

    P-vertices are circles labelled "P<color>", F-vertices squares labelled "F".
    """
    lines = [f"graph {name} {{"]
    for v in graph.vertices:
        shape = "circle" if v.kind is VertexKind.P else "square"
        lines.append(f'  {_dot_quote(v.id)} [shape={shape}, label="{v.label}"];')
    for a, b in graph.edges:
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

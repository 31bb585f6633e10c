"""
Pytest configuration and fixtures for ntree-qi tests.

Complexes are the worked examples used throughout the test suite; graph
factories build random valid colored graphs from a numpy seed so that
hypothesis only has to draw integers.
"""

import itertools
from typing import Callable, Dict, List

import numpy as np
import pytest

from ntree_qi.complex.generate import random_gamma_tree
from ntree_qi.complex.simplicial import SimplicialComplex
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    path_graph,
    single_piece_graph,
    star_graph,
)


def make_complex(dimension: int, *simplices: str) -> SimplicialComplex:
    """Complex from compact simplex strings, e.g. make_complex(2, "abc", "abd")."""
    return SimplicialComplex.from_simplices(dimension, (list(s) for s in simplices))


def path_complex(edges: int) -> SimplicialComplex:
    """The path 1-tree with the given number of edges on vertices a, b, c, ..."""
    names = "abcdefghijklmnopqrstuvwxyz"
    return SimplicialComplex.from_simplices(1, ([names[i], names[i + 1]] for i in range(edges)))


def random_valid_graph(n: int, pieces: int, seed: int, extra_edges: int = 0) -> ColoredGraph:
    """
    Random valid colored graph: a random tree plus up to `extra_edges` F-P
    edges that keep every F-vertex within the class constraints.
    """
    rng = np.random.default_rng(seed)
    tree = random_gamma_tree(n, pieces, rng)
    edges = set(tree.edges)
    adjacency: Dict[str, set] = {v: set(tree.neighbors(v)) for v in tree.ids}

    candidates = [
        (f.id, p.id) for f in tree.f_vertices for p in tree.p_vertices
        if not tree.has_edge(f.id, p.id)
    ]
    for index in rng.permutation(len(candidates))[:extra_edges]:
        f_id, p_id = candidates[int(index)]
        colors = {tree.vertex(u).color for u in adjacency[f_id]}
        if len(adjacency[f_id]) < n + 1 and tree.vertex(p_id).color not in colors:
            edges.add(tuple(sorted((f_id, p_id))))
            adjacency[f_id].add(p_id)
            adjacency[p_id].add(f_id)
    return ColoredGraph.build(n, tree.vertices, edges)


def set_partitions(items: List[str]):
    """All set partitions of a list, as lists of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def label_partitions(graph: ColoredGraph):
    """All partitions of a graph's vertices whose blocks share one label."""
    classes: Dict[int, List[str]] = {}
    for v in graph.vertices:
        classes.setdefault(v.label_key, []).append(v.id)
    per_class = [list(set_partitions(members)) for _, members in sorted(classes.items())]
    for choice in itertools.product(*per_class):
        yield [block for blocks in choice for block in blocks]


# -- complexes ---------------------------------------------------------------

@pytest.fixture
def two_triangles() -> SimplicialComplex:
    """{a,b,c} and {a,b,d} glued along {a,b}."""
    return make_complex(2, "abc", "abd")


@pytest.fixture
def star_complex() -> SimplicialComplex:
    """A central triangle with one triangle on each edge."""
    return SimplicialComplex.from_simplices(2, [["1", "2", "3"], ["1", "2", "4"], ["2", "3", "5"], ["1", "3", "6"]])


@pytest.fixture
def single_triangle() -> SimplicialComplex:
    return make_complex(2, "abc")


@pytest.fixture
def cyclic_complex() -> SimplicialComplex:
    """Three triangles pairwise sharing distinct edges."""
    return SimplicialComplex.from_simplices(2, [["1", "2", "3"], ["1", "2", "4"], ["1", "3", "4"]])


@pytest.fixture
def pinched_strip() -> SimplicialComplex:
    """A strip of five triangles whose ends meet in a vertex."""
    return make_complex(2, "abc", "bcd", "cde", "def", "efa")


@pytest.fixture
def path3() -> SimplicialComplex:
    """The path a-b-c-d."""
    return path_complex(3)


@pytest.fixture
def path5() -> SimplicialComplex:
    """The path a-b-c-d-e-f."""
    return path_complex(5)


# -- graphs ------------------------------------------------------------------

@pytest.fixture
def edge_graph() -> ColoredGraph:
    """P1-F-P2 in dimension 2."""
    return path_graph(2, [1, 2])


@pytest.fixture
def alternating_path() -> ColoredGraph:
    """1-F-2-F-1-F-2 in dimension 2."""
    return path_graph(2, [1, 2, 1, 2])


@pytest.fixture
def three_color_path() -> ColoredGraph:
    """1-F-2-F-3 in dimension 2."""
    return path_graph(2, [1, 2, 3])


@pytest.fixture
def full_star() -> ColoredGraph:
    """Central F joined to P1, P2, P3 in dimension 2."""
    return star_graph(2, [1, 2, 3])


@pytest.fixture
def single_piece() -> ColoredGraph:
    return single_piece_graph(2, 1)


@pytest.fixture
def graph_factory() -> Callable[..., ColoredGraph]:
    """Factory for random valid graphs: graph_factory(n, pieces, seed, extra_edges=0)."""
    return random_valid_graph


"""Integration test fixtures: brute-force oracles and exhaustive input sets."""

import itertools
from typing import Iterator, List, Set

import networkx as nx
import pytest

from ntree_qi.census import enumerate_gamma_trees
from ntree_qi.complex.simplicial import SimplicialComplex
from ntree_qi.graphs.canonical import canonical_form
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    f_vertex,
    p_vertex,
    single_piece_graph,
    validate_graph,
)
from ntree_qi.graphs.covering import is_weak_covering
from ntree_qi.graphs.minimize import VertexPartition, quotient

from tests.conftest import label_partitions


def weak_quotients(graph: ColoredGraph) -> Set[bytes]:
    """Canonical forms of every valid graph the given one weakly covers by a quotient map."""
    found = set()
    for blocks in label_partitions(graph):
        result = quotient(graph, VertexPartition(tuple(frozenset(b) for b in blocks)))
        if validate_graph(result.graph) == [] and is_weak_covering(result.covering):
            found.add(canonical_form(result.graph))
    return found


def tree_complex(tree: nx.Graph) -> SimplicialComplex:
    """1-complex of a networkx tree."""
    return SimplicialComplex.from_simplices(1, ([str(a), str(b)] for a, b in tree.edges()))


def labelled_trees(n: int, k: int) -> Iterator[ColoredGraph]:
    """
    Valid colored trees with k P-vertices, by coloring every unlabelled tree.

    Each bipartition side is tried as the F side and every color assignment
    is tried on the P side; the output repeats isomorphic graphs.
    """
    if k == 1:
        for c in range(1, n + 2):
            yield single_piece_graph(n, c)
        return
    for order in range(k + 1, 2 * k):
        for tree in nx.nonisomorphic_trees(order):
            for f_side, p_side in itertools.permutations(nx.bipartite.sets(tree)):
                if len(p_side) != k or any(not 2 <= tree.degree(v) <= n + 1 for v in f_side):
                    continue
                p_nodes = sorted(p_side)
                index = {v: i for i, v in enumerate(p_nodes)}
                stars = [[index[u] for u in tree[v]] for v in f_side]
                edges = [(f"f{v}", f"p{u}") for v in f_side for u in tree[v]]
                for colors in itertools.product(range(1, n + 2), repeat=k):
                    if any(len({colors[i] for i in star}) < len(star) for star in stars):
                        continue
                    vertices = [f_vertex(f"f{v}") for v in f_side]
                    vertices += [p_vertex(f"p{v}", c) for v, c in zip(p_nodes, colors)]
                    graph = ColoredGraph.build(n, vertices, edges)
                    if not validate_graph(graph):
                        yield graph


def valid_graphs(n: int, max_vertices: int) -> List[ColoredGraph]:
    """
    Every valid graph with at most max_vertices vertices, one per isomorphism class.

    P colors are taken in nondecreasing order and each F-vertex picks a
    neighborhood of 2..n+1 distinctly colored P-vertices. Repeated
    neighborhoods give parallel F-vertices, so cyclic graphs are included.
    """
    found = {}
    for c in range(1, n + 2):
        graph = single_piece_graph(n, c)
        found[canonical_form(graph)] = graph
    for p_count in range(2, max_vertices):
        for f_count in range(1, max_vertices - p_count + 1):
            if p_count > n * f_count + 1:
                continue
            for colors in itertools.combinations_with_replacement(range(1, n + 2), p_count):
                stars = [
                    star
                    for size in range(2, n + 2)
                    for star in itertools.combinations(range(p_count), size)
                    if len({colors[i] for i in star}) == size
                ]
                vertices = [p_vertex(f"p{i}", c) for i, c in enumerate(colors)]
                vertices += [f_vertex(f"f{j}") for j in range(f_count)]
                for chosen in itertools.combinations_with_replacement(stars, f_count):
                    edges = [(f"f{j}", f"p{i}") for j, star in enumerate(chosen) for i in star]
                    graph = ColoredGraph.build(n, vertices, edges)
                    if graph.is_connected():
                        found.setdefault(canonical_form(graph), graph)
    return list(found.values())


@pytest.fixture(scope="session")
def small_trees():
    """Every colored tree in dimension 2 with at most 4 P-vertices (at most 7 vertices)."""
    return [t for k in range(1, 5) for t in enumerate_gamma_trees(2, k)]


@pytest.fixture(scope="session")
def small_cyclic_graphs():
    """A few valid cyclic graphs on at most 8 vertices."""
    square = ColoredGraph.build(
        2,
        [p_vertex("a", 1), p_vertex("b", 2), f_vertex("x"), f_vertex("y")],
        [("a", "x"), ("x", "b"), ("b", "y"), ("y", "a")],
    )
    hexagon = ColoredGraph.build(
        2,
        [p_vertex("a", 1), p_vertex("b", 2), p_vertex("c", 3), f_vertex("x"), f_vertex("y"), f_vertex("z")],
        [("a", "x"), ("x", "b"), ("b", "y"), ("y", "c"), ("c", "z"), ("z", "a")],
    )
    eight = ColoredGraph.build(
        2,
        [p_vertex("a", 1), p_vertex("b", 2), p_vertex("c", 1), p_vertex("d", 2),
         f_vertex("w"), f_vertex("x"), f_vertex("y"), f_vertex("z")],
        [("a", "w"), ("w", "b"), ("b", "x"), ("x", "c"), ("c", "y"), ("y", "d"), ("d", "z"), ("z", "a")],
    )
    theta = ColoredGraph.build(
        2,
        [p_vertex("a", 1), p_vertex("b", 2), f_vertex("x"), f_vertex("y"), f_vertex("z")],
        [("a", "x"), ("x", "b"), ("a", "y"), ("y", "b"), ("a", "z"), ("z", "b")],
    )
    return [square, hexagon, eight, theta]


@pytest.fixture(scope="session")
def small_valid_graphs():
    """Every valid graph in dimension 2 with at most 8 vertices, trees and cyclic."""
    return valid_graphs(2, 8)

"""
Tests for bisimilarity and its color-permutation variant
"""

from hypothesis import given, settings, strategies as st

from ntree_qi.graphs.bisimulation import bisimilar, bisimilar_up_to_permutation, is_identity
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    f_vertex,
    p_vertex,
    path_graph,
    permute_colors,
    star_graph,
)
from ntree_qi.graphs.minimize import minimize

from tests.conftest import random_valid_graph


class TestBisimilar:
    """Tests for bisimilar()."""

    def test_reflexive(self, full_star):
        assert bisimilar(full_star, full_star)

    def test_paths_fold_together(self, edge_graph, alternating_path):
        """Alternating paths of any length are bisimilar to an edge."""
        assert bisimilar(alternating_path, edge_graph)
        assert bisimilar(path_graph(2, [2, 1, 2, 1, 2, 1]), edge_graph)

    def test_cycle(self, edge_graph):
        cycle = ColoredGraph.build(
            2,
            [p_vertex("a", 1), p_vertex("b", 2), f_vertex("x"), f_vertex("y")],
            [("a", "x"), ("x", "b"), ("b", "y"), ("y", "a")],
        )
        assert bisimilar(cycle, edge_graph)

    def test_colors_distinguish(self, edge_graph):
        assert not bisimilar(edge_graph, path_graph(2, [2, 3]))

    def test_star_vs_path(self, full_star, three_color_path):
        assert not bisimilar(full_star, three_color_path)

    def test_dimensions_differ(self):
        assert not bisimilar(path_graph(2, [1, 2]), path_graph(3, [1, 2]))


class TestBisimilarUpToPermutation:
    """Tests for bisimilar_up_to_permutation()."""

    def test_identity_for_stars(self, full_star):
        """Stars on all three colors match without recoloring."""
        sigma = bisimilar_up_to_permutation(full_star, star_graph(2, [3, 1, 2], prefix="x"))
        assert sigma == {1: 1, 2: 2, 3: 3}
        assert is_identity(sigma)

    def test_witness_completed(self):
        """2-F-3-F-2 matches 1-F-2-F-1 via 2->1, 3->2, and 1 takes the free color 3."""
        sigma = bisimilar_up_to_permutation(path_graph(2, [1, 2, 1]), path_graph(2, [2, 3, 2]))
        assert sigma == {1: 3, 2: 1, 3: 2}
        assert not is_identity(sigma)

    def test_middle_color(self):
        """The middle color of a 3-color path must be matched."""
        sigma = bisimilar_up_to_permutation(path_graph(2, [1, 2, 3]), path_graph(2, [2, 3, 1]))
        assert sigma == {1: 1, 2: 3, 3: 2}

    def test_no_witness(self, edge_graph, full_star):
        assert bisimilar_up_to_permutation(edge_graph, full_star) is None

    def test_dimensions_differ(self):
        assert bisimilar_up_to_permutation(path_graph(1, [1, 2]), path_graph(2, [1, 2])) is None

    @given(
        seed=st.integers(min_value=0, max_value=2**32),
        n=st.integers(1, 3),
        pieces=st.integers(1, 6),
        data=st.data(),
    )
    @settings(max_examples=50, deadline=None)
    def test_witness_is_valid(self, seed, n, pieces, data):
        """A recolored graph is always matched, and the witness really works."""
        graph = random_valid_graph(n, pieces, seed)
        images = data.draw(st.permutations(list(range(1, n + 2))))
        recolored = permute_colors(graph, dict(zip(range(1, n + 2), images)))
        sigma = bisimilar_up_to_permutation(graph, recolored)
        assert sigma is not None
        assert sorted(sigma) == sorted(sigma.values()) == list(range(1, n + 2))
        assert bisimilar(graph, permute_colors(recolored, sigma))
        assert minimize(permute_colors(recolored, sigma)).graph.colors_used == minimize(graph).graph.colors_used

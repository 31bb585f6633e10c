"""
Tests for the Simplicial Complex Module

Covers construction invariants, the complex JSON format and the 1-skeleton.
"""

import json

import pytest

from ntree_qi.complex.simplicial import (
    SimplicialComplex,
    dump_complex,
    faces_of,
    one_skeleton,
    parse_complex,
)
from ntree_qi.exceptions import ComplexFormatError

from tests.conftest import make_complex


class TestParseComplex:
    """Tests for parse_complex()."""

    def test_single_edge(self):
        """Smallest input: a 1-complex with one edge."""
        complex_ = parse_complex('{"dimension":1,"simplices":[["a","b"]]}')
        assert complex_.dimension == 1
        assert complex_.simplices == (("a", "b"),)

    def test_two_triangles(self):
        """Two triangles sharing {a,b}."""
        complex_ = parse_complex('{"dimension":2,"simplices":[["a","b","c"],["a","b","d"]]}')
        assert len(complex_) == 2
        assert complex_.vertices == ("a", "b", "c", "d")

    def test_wrong_cardinality(self):
        """A 2-complex cannot contain an edge."""
        with pytest.raises(ComplexFormatError) as exc_info:
            parse_complex('{"dimension":2,"simplices":[["a","b"]]}')
        assert "cardinality 2" in str(exc_info.value)

    def test_repeated_vertex(self):
        """A simplex with a repeated vertex is rejected."""
        with pytest.raises(ComplexFormatError, match="repeated vertex"):
            parse_complex('{"dimension":2,"simplices":[["a","a","b"]]}')

    def test_duplicate_simplices_in_any_order(self):
        """Duplicates are detected as sets."""
        with pytest.raises(ComplexFormatError, match="duplicate"):
            parse_complex('{"dimension":1,"simplices":[["a","b"],["b","a"]]}')

    def test_malformed_json(self):
        """Malformed JSON is wrapped in ComplexFormatError."""
        with pytest.raises(ComplexFormatError, match="malformed"):
            parse_complex('{"dimension": 1, "simplices": [')

    @pytest.mark.parametrize("text", [
        '[]',
        '{"dimension": 1}',
        '{"dimension": 1, "simplices": "ab"}',
        '{"dimension": 1, "simplices": [["a", 2]]}',
        '{"dimension": 0, "simplices": [["a"]]}',
        '{"dimension": "2", "simplices": [["a", "b", "c"]]}',
        '{"dimension": 1, "simplices": []}',
    ])
    def test_structural_errors(self, text):
        """Every structural problem raises ComplexFormatError."""
        with pytest.raises(ComplexFormatError):
            parse_complex(text)

    def test_identifiers_preserved_verbatim(self):
        """Vertex names are opaque strings."""
        complex_ = parse_complex('{"dimension":1,"simplices":[["vertex 10","v-2"]]}')
        assert set(complex_.vertices) == {"vertex 10", "v-2"}


class TestDumpComplex:
    """Tests for dump_complex()."""

    def test_output_is_sorted(self):
        """Simplices and their vertices are written in sorted order."""
        complex_ = make_complex(2, "dba", "cba")
        assert json.loads(dump_complex(complex_)) == {
            "dimension": 2,
            "simplices": [["a", "b", "c"], ["a", "b", "d"]],
        }

    def test_parses_back(self, star_complex):
        """Dumped complexes parse to an equal complex."""
        assert parse_complex(dump_complex(star_complex)) == star_complex


class TestSimplicialComplex:
    """Tests for the SimplicialComplex value type."""

    def test_input_order_irrelevant(self):
        """Equal simplex sets give equal complexes."""
        assert make_complex(2, "abc", "abd") == make_complex(2, "dab", "cba")

    def test_face_index(self, two_triangles):
        """Each (n-1)-face maps to the simplices containing it."""
        index = two_triangles.face_index
        assert index[("a", "b")] == (("a", "b", "c"), ("a", "b", "d"))
        assert index[("a", "c")] == (("a", "b", "c"),)
        assert two_triangles.shared_faces == [("a", "b")]

    def test_faces_of(self):
        """Codimension-one faces in sorted order."""
        assert faces_of(("a", "b", "c")) == [("a", "b"), ("a", "c"), ("b", "c")]

    def test_rename(self, two_triangles):
        """Renaming keeps unmapped names."""
        renamed = two_triangles.rename({"a": "x"})
        assert renamed.vertices == ("b", "c", "d", "x")


class TestOneSkeleton:
    """Tests for one_skeleton()."""

    def test_two_triangles(self, two_triangles):
        """The 1-skeleton of two glued triangles has 5 edges."""
        graph = one_skeleton(two_triangles)
        assert graph.number_of_nodes() == 4
        assert graph.number_of_edges() == 5
        assert not graph.has_edge("c", "d")

    def test_single_simplex_is_complete(self):
        """A simplex has a complete 1-skeleton."""
        graph = one_skeleton(make_complex(3, "abcd"))
        assert graph.number_of_edges() == 6

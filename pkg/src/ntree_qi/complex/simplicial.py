"""
Simplicial Complex Module
Pure n-dimensional abstract complexes given by their top simplices.
"""

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ntree_qi.exceptions import ComplexFormatError


logger = logging.getLogger(__name__)

# A simplex or face is stored as the sorted tuple of its vertex names
Simplex = Tuple[str, ...]


def faces_of(simplex: Simplex) -> List[Simplex]:
    """Codimension-one faces of a simplex, in sorted order."""
    return sorted(simplex[:i] + simplex[i + 1:] for i in range(len(simplex)))


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A pure n-dimensional complex.

    Vertex identifiers are opaque strings; simplices are kept as sorted
    tuples in lexicographic order so every derived ordering is reproducible.
    """

    dimension: int
    simplices: Tuple[Simplex, ...]

    def __post_init__(self):
        if not isinstance(self.dimension, int) or isinstance(self.dimension, bool) or self.dimension < 1:
            raise ComplexFormatError(f"dimension must be an integer >= 1, got {self.dimension!r}")
        if not self.simplices:
            raise ComplexFormatError("complex must contain at least one simplex")

        seen = set()
        for simplex in self.simplices:
            if len(simplex) != self.dimension + 1:
                raise ComplexFormatError(
                    f"simplex cardinality {len(simplex)} != {self.dimension + 1}: {list(simplex)}"
                )
            if len(set(simplex)) != len(simplex):
                raise ComplexFormatError(f"repeated vertex inside simplex {list(simplex)}")
            key = frozenset(simplex)
            if key in seen:
                raise ComplexFormatError(f"duplicate simplex {sorted(simplex)}")
            seen.add(key)

        normalized = tuple(sorted(tuple(sorted(s)) for s in self.simplices))
        object.__setattr__(self, "simplices", normalized)

    @classmethod
    def from_simplices(cls, dimension: int, simplices: Iterable[Sequence[str]]) -> "SimplicialComplex":
        """Build a complex from any iterable of vertex sequences."""
        return cls(dimension=dimension, simplices=tuple(tuple(s) for s in simplices))

    @cached_property
    def vertices(self) -> Tuple[str, ...]:
        """Vertex set, sorted by name."""
        return tuple(sorted({v for s in self.simplices for v in s}))

    @cached_property
    def face_index(self) -> Dict[Simplex, Tuple[Simplex, ...]]:
        """Map from each (n-1)-face to the simplices containing it."""
        index: Dict[Simplex, List[Simplex]] = {}
        for simplex in self.simplices:
            for face in faces_of(simplex):
                index.setdefault(face, []).append(simplex)
        return {face: tuple(members) for face, members in sorted(index.items())}

    @property
    def shared_faces(self) -> List[Simplex]:
        """(n-1)-faces bounding at least two n-simplices, sorted."""
        return [face for face, members in self.face_index.items() if len(members) >= 2]

    def rename(self, mapping: Dict[str, str]) -> "SimplicialComplex":
        """Copy of the complex with vertices renamed (unmapped names kept)."""
        return SimplicialComplex.from_simplices(
            self.dimension,
            ([mapping.get(v, v) for v in simplex] for simplex in self.simplices),
        )

    def __len__(self) -> int:
        return len(self.simplices)


def one_skeleton(complex_: SimplicialComplex) -> nx.Graph:
    """The 1-skeleton of K, i.e. the presentation graph of A_K."""
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices)
    for simplex in complex_.simplices:
        for i, u in enumerate(simplex):
            for v in simplex[i + 1:]:
                graph.add_edge(u, v)
    return graph


def complex_from_dict(data: object) -> SimplicialComplex:
    """Build a complex from already-decoded JSON data."""
    if not isinstance(data, dict):
        raise ComplexFormatError("complex JSON must be an object")
    if "dimension" not in data or "simplices" not in data:
        raise ComplexFormatError('complex JSON needs "dimension" and "simplices"')

    dimension = data["dimension"]
    simplices = data["simplices"]
    if not isinstance(simplices, list):
        raise ComplexFormatError('"simplices" must be a list')
    for simplex in simplices:
        if not isinstance(simplex, list) or not all(isinstance(v, str) for v in simplex):
            raise ComplexFormatError(f"each simplex must be a list of strings, got {simplex!r}")

    return SimplicialComplex.from_simplices(dimension, simplices)


def complex_to_dict(complex_: SimplicialComplex) -> dict:
    """JSON-ready representation of a complex."""
    return {
        "dimension": complex_.dimension,
        "simplices": [list(s) for s in complex_.simplices],
    }


def parse_complex(text: str) -> SimplicialComplex:
    """
    Parse the complex JSON format.

    Args:
        text: Document of the form {"dimension": n, "simplices": [[...], ...]}.

    Returns:
        The validated complex; vertex identifiers are preserved verbatim.

    Raises:
        ComplexFormatError: On malformed JSON or any structural violation.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(f"malformed complex JSON: {e}") from e

    complex_ = complex_from_dict(data)
    logger.debug(f"Parsed {complex_.dimension}-complex with {len(complex_)} simplices")
    return complex_


def dump_complex(complex_: SimplicialComplex) -> str:
    """Serialise a complex in the complex JSON format."""
    return json.dumps(complex_to_dict(complex_))

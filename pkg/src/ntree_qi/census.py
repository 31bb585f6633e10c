"""
Census Module

Enumerates the valid colored trees with a given number of P-vertices,
minimizes them and counts the distinct quasi-isometry classes, bucketed by
the P-vertex count of the minimal graph.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Tuple

from ntree_qi.exceptions import ClassificationError
from ntree_qi.graphs.canonical import canonical_form
from ntree_qi.graphs.colored_graph import ColoredGraph, VertexKind, f_vertex, p_vertex
from ntree_qi.graphs.minimize import minimize


logger = logging.getLogger(__name__)


def _extensions(tree: ColoredGraph) -> Iterator[ColoredGraph]:
    """
    Trees with one more P-vertex.

    Either a new F-vertex with a new leaf of another color hangs off a
    P-vertex, or an F-vertex below capacity gets a new leaf.
    """
    n = tree.n
    colors = range(1, n + 2)
    p_id = f"p{len(tree.p_vertices)}"
    f_id = f"f{len(tree.f_vertices)}"

    for v in tree.vertices:
        if v.kind is VertexKind.P:
            for c in colors:
                if c != v.color:
                    yield ColoredGraph.build(
                        n,
                        tree.vertices + (f_vertex(f_id), p_vertex(p_id, c)),
                        tree.edges + ((v.id, f_id), (f_id, p_id)),
                    )
        elif tree.degree(v.id) < n + 1:
            taken = {tree.vertex(u).color for u in tree.neighbors(v.id)}
            for c in colors:
                if c not in taken:
                    yield ColoredGraph.build(
                        n, tree.vertices + (p_vertex(p_id, c),), tree.edges + ((v.id, p_id),)
                    )


def enumerate_levels(n: int, k_max: int) -> Iterator[Tuple[int, List[ColoredGraph]]]:
    """
    Yield (k, trees with exactly k P-vertices) for k = 1..k_max.

    Each level is deduplicated up to colored isomorphism and sorted by
    canonical form.
    """
    level = {
        canonical_form(tree): tree
        for tree in (ColoredGraph.build(n, [p_vertex("p0", c)], []) for c in range(1, n + 2))
    }
    for k in range(1, k_max + 1):
        if k > 1:
            grown: Dict[bytes, ColoredGraph] = {}
            for key in sorted(level):
                for child in _extensions(level[key]):
                    grown.setdefault(canonical_form(child), child)
            level = grown
        logger.debug(f"Level {k}: {len(level)} trees")
        yield k, [level[key] for key in sorted(level)]


def enumerate_gamma_trees(n: int, k: int) -> Iterator[ColoredGraph]:
    """Every valid colored tree with exactly k P-vertices, once per isomorphism type."""
    for level, trees in enumerate_levels(n, k):
        if level == k:
            yield from trees


def _minimal_class(tree: ColoredGraph) -> Tuple[bytes, ColoredGraph]:
    minimal = minimize(tree).graph
    return canonical_form(minimal, mod_color_permutation=True), minimal


@dataclass(frozen=True)
class CensusReport:
    """Quasi-isometry class counts by P-vertex count of the minimal graph."""
    n: int
    max_pieces: int
    buckets: Mapping[int, int]
    abelian_included: bool = True
    representatives: Tuple[Tuple[bytes, ColoredGraph], ...] = field(
        default=(), compare=False, repr=False
    )

    @property
    def total(self) -> int:
        return sum(self.buckets.values()) + (1 if self.abelian_included else 0)

    def buckets_with_abelian(self) -> Dict[int, int]:
        """Buckets with the abelian class counted among the one-piece classes."""
        buckets = dict(self.buckets)
        if self.abelian_included:
            buckets[1] = buckets.get(1, 0) + 1
        return buckets

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_pieces": self.max_pieces,
            "buckets": {str(j): count for j, count in sorted(self.buckets.items())},
            "abelian": self.abelian_included,
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "CensusReport":
        """
        Parse the report JSON written by to_json().

        Raises:
            ClassificationError: On malformed JSON or missing fields.
        """
        try:
            data = json.loads(text)
            return cls(
                n=data["n"],
                max_pieces=data["max_pieces"],
                buckets={int(j): count for j, count in data["buckets"].items()},
                abelian_included=data["abelian"],
            )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ClassificationError(f"malformed census JSON: {e}") from e


def census(n: int, k_max: int, include_abelian: bool = True, jobs: int = 1) -> CensusReport:
    """
    Count quasi-isometry classes of groups built from at most k_max pieces.

    Args:
        n: Dimension.
        k_max: Largest piece count enumerated.
        include_abelian: Count the single-simplex class in the total.
        jobs: Worker processes for minimization; the report does not depend on it.

    Returns:
        CensusReport with one bucket per occurring minimal P-vertex count.
    """
    if n < 1 or k_max < 1:
        raise ValueError(f"census needs n >= 1 and k_max >= 1, got n={n}, k_max={k_max}")

    classes: Dict[bytes, ColoredGraph] = {}
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for k, trees in enumerate_levels(n, k_max):
            if executor is not None:
                results = list(executor.map(_minimal_class, trees, chunksize=64))
            else:
                results = [_minimal_class(tree) for tree in trees]

            before = len(classes)
            for key, minimal in results:
                classes.setdefault(key, minimal)
            logger.info(f"k={k}: {len(trees)} trees, {len(classes) - before} new classes")
    finally:
        if executor is not None:
            executor.shutdown()

    buckets: Dict[int, int] = {}
    for minimal in classes.values():
        j = len(minimal.p_vertices)
        buckets[j] = buckets.get(j, 0) + 1

    cyclic = sum(1 for minimal in classes.values() if not minimal.is_tree())
    if cyclic:
        logger.info(f"{cyclic} minimal classes contain cycles")

    return CensusReport(
        n=n,
        max_pieces=k_max,
        buckets=dict(sorted(buckets.items())),
        abelian_included=include_abelian,
        representatives=tuple((key, classes[key]) for key in sorted(classes)),
    )

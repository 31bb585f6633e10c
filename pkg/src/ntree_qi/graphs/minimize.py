"""
Minimization Module

Computes the minimal graph of a bisimilarity class as the quotient by the
coarsest stable partition: the coarsest refinement of the color partition in
which any two vertices of a block see the same set of neighbor blocks.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

from ntree_qi.exceptions import InvalidGraphError
from ntree_qi.graphs.colored_graph import (
    ColoredGraph,
    GraphVertex,
    validate_graph,
)
from ntree_qi.graphs.covering import WeakCoveringMap


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPartition:
    """Color-homogeneous partition of a graph's vertices."""
    blocks: Tuple[FrozenSet[str], ...]

    @cached_property
    def block_of(self) -> Dict[str, int]:
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    def is_valid_for(self, graph: ColoredGraph) -> bool:
        """Blocks are nonempty, disjoint, cover the graph, and share one label."""
        members = [v for block in self.blocks for v in block]
        if any(not block for block in self.blocks):
            return False
        if len(members) != len(set(members)) or set(members) != set(graph.ids):
            return False
        return all(len({graph.vertex(v).label for v in block}) == 1 for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class MinimizationResult:
    """Minimal graph plus the quotient map onto it."""
    graph: ColoredGraph
    covering: WeakCoveringMap
    partition: VertexPartition


def coarsest_stable_partition(graph: ColoredGraph) -> VertexPartition:
    """
    Iterated refinement to the coarsest stable partition.

    Each round re-keys a vertex by (its block, the set of its neighbor blocks)
    and stops once the block count no longer grows. Block numbers are ranks of
    the sorted keys, so the result does not depend on vertex names.
    """
    block = _rank({v.id: v.label_key for v in graph.vertices})
    count = len(set(block.values()))
    rounds = 0

    while True:
        rounds += 1
        keys = {
            v: (block[v], tuple(sorted({block[u] for u in graph.neighbors(v)})))
            for v in graph.ids
        }
        refined = _rank(keys)
        refined_count = len(set(refined.values()))
        block = refined
        if refined_count == count:
            break
        count = refined_count

    logger.debug(f"Refinement stable after {rounds} rounds with {count} blocks")

    grouped: Dict[int, List[str]] = {}
    for v, b in block.items():
        grouped.setdefault(b, []).append(v)
    return VertexPartition(tuple(frozenset(grouped[b]) for b in sorted(grouped)))


def _rank(keys: Dict[str, object]) -> Dict[str, int]:
    ranking = {key: i for i, key in enumerate(sorted(set(keys.values())))}
    return {v: ranking[key] for v, key in keys.items()}


def quotient(graph: ColoredGraph, partition: VertexPartition) -> MinimizationResult:
    """
    Quotient graph of a partition; parallel edges collapse to one.

    Each quotient vertex is named after the least member id of its block.
    """
    names = {i: min(block) for i, block in enumerate(partition.blocks)}
    vertex_map = {v: names[i] for v, i in partition.block_of.items()}

    vertices = []
    for i, block in enumerate(partition.blocks):
        representative = graph.vertex(names[i])
        vertices.append(GraphVertex(id=names[i], kind=representative.kind, color=representative.color))

    edges = {tuple(sorted((vertex_map[a], vertex_map[b]))) for a, b in graph.edges}
    target = ColoredGraph.build(graph.n, vertices, edges)
    return MinimizationResult(
        graph=target,
        covering=WeakCoveringMap(source=graph, target=target, vertex_map=vertex_map),
        partition=partition,
    )


def minimize(graph: ColoredGraph) -> MinimizationResult:
    """
    Minimal element of the bisimilarity class of a valid graph.

    Raises:
        InvalidGraphError: If the graph violates the P/F class constraints.
    """
    violations = validate_graph(graph)
    if violations:
        raise InvalidGraphError(violations)

    result = quotient(graph, coarsest_stable_partition(graph))
    logger.debug(
        f"Minimized {len(graph)} vertices to {len(result.graph)} "
        f"({len(result.graph.p_vertices)} P, {len(result.graph.f_vertices)} F)"
    )
    return result


def is_minimal(graph: ColoredGraph) -> bool:
    return len(minimize(graph).graph) == len(graph)

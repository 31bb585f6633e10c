"""
Weak Covering Module

A weak covering is a color-respecting graph homomorphism f: Γ -> Γ' such that
every edge of Γ' at f(v) lifts to an edge of Γ at v.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping

from ntree_qi.exceptions import WeakCoveringError
from ntree_qi.graphs.colored_graph import ColoredGraph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeakCoveringMap:
    """A candidate weak covering, given by its action on vertices."""
    source: ColoredGraph
    target: ColoredGraph
    vertex_map: Mapping[str, str]

    def as_dict(self) -> Dict[str, str]:
        return {v: self.vertex_map[v] for v in sorted(self.vertex_map)}


def is_weak_covering(covering: WeakCoveringMap) -> bool:
    """
    Check the three weak-covering conditions.

    Raises:
        WeakCoveringError: If the vertex map is not total on the source or
            sends a vertex outside the target.
    """
    source, target, f = covering.source, covering.target, covering.vertex_map

    missing = [v for v in source.ids if v not in f]
    if missing:
        raise WeakCoveringError(f"vertex map is not total; missing {missing}")
    strays = sorted({f[v] for v in source.ids if not target.has_vertex(f[v])})
    if strays:
        raise WeakCoveringError(f"vertex map leaves the target graph: {strays}")

    for v in source.vertices:
        image = target.vertex(f[v.id])
        if image.kind is not v.kind or image.color != v.color:
            logger.debug(f"Color mismatch: {v.id} ({v.label}) -> {image.id} ({image.label})")
            return False

    for a, b in source.edges:
        if not target.has_edge(f[a], f[b]):
            logger.debug(f"Edge ({a}, {b}) does not map to an edge")
            return False

    for v in source.ids:
        lifted = {f[u] for u in source.neighbors(v)}
        for w in target.neighbors(f[v]):
            if w not in lifted:
                logger.debug(f"Edge ({f[v]}, {w}) does not lift to {v}")
                return False

    if source.is_connected() and target.is_connected():
        # connected source and target: the lifting condition forces onto
        missed = sorted(set(target.ids) - {f[v] for v in source.ids})
        if missed:
            logger.warning(f"Weak covering misses target vertices {missed}")
            return False

    return True

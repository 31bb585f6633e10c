"""
Canonical Form Module

Canonical encodings of colored graphs by color refinement with
individualization and backtracking. Two graphs get the same encoding exactly
when they are isomorphic as colored graphs (optionally after recoloring P-colors).
"""

import itertools
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from ntree_qi.graphs.colored_graph import ColoredGraph


logger = logging.getLogger(__name__)

# Leaves explored before the search is reported as unusually large
DEFAULT_SEARCH_LIMIT = 100_000

Cells = List[List[str]]
LeafKey = Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]


def _refine(cells: Cells, adjacency: Dict[str, Tuple[str, ...]]) -> Cells:
    """
    Equitable refinement of an ordered partition.

    A cell splits by the sorted multiset of its members' neighbor cells, and
    the fragments are ordered by that multiset, so the ordered result depends
    only on the isomorphism type of (graph, ordered partition).
    """
    while True:
        index = {v: i for i, cell in enumerate(cells) for v in cell}
        refined: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[str]] = {}
            for v in cell:
                signature = tuple(sorted(index[u] for u in adjacency[v]))
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(sorted(groups[sig]) for sig in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _leaves(cells: Cells, adjacency: Dict[str, Tuple[str, ...]]) -> Iterator[Cells]:
    """Discrete partitions reachable by individualizing the first non-singleton cell."""
    cells = _refine(cells, adjacency)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        yield cells
        return
    for v in cells[target]:
        rest = [u for u in cells[target] if u != v]
        yield from _leaves(cells[:target] + [[v], rest] + cells[target + 1:], adjacency)


def _leaf_key(order: Sequence[str], labels: Dict[str, int], edges) -> LeafKey:
    position = {v: i for i, v in enumerate(order)}
    return (
        tuple(labels[v] for v in order),
        tuple(sorted(tuple(sorted((position[a], position[b]))) for a, b in edges)),
    )


def _best_key(graph: ColoredGraph, labels: Dict[str, int], search_limit: int) -> LeafKey:
    initial: Dict[int, List[str]] = {}
    for v in graph.ids:
        initial.setdefault(labels[v], []).append(v)
    cells = [initial[label] for label in sorted(initial)]

    best = None
    explored = 0
    for leaf in _leaves(cells, graph.adjacency):
        explored += 1
        if explored == search_limit + 1:
            logger.warning(
                f"Canonical labelling explored more than {search_limit} leaves "
                f"on a {len(graph)}-vertex graph"
            )
        key = _leaf_key([cell[0] for cell in leaf], labels, graph.edges)
        if best is None or key < best:
            best = key
    return best if best is not None else ((), ())


def _encode(n: int, key: LeafKey) -> bytes:
    labels, edges = key
    label_text = ",".join("F" if label == 0 else f"P{label}" for label in labels)
    edge_text = ",".join(f"{a}-{b}" for a, b in edges)
    return f"n={n};v={label_text};e={edge_text}".encode("utf-8")


def canonical_form(
    graph: ColoredGraph,
    mod_color_permutation: bool = False,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
) -> bytes:
    """
    Canonical byte encoding of a colored graph.

    Args:
        graph: Graph to encode; vertex ids do not influence the result.
        mod_color_permutation: Also minimize over recolorings of the P-colors.
        search_limit: Leaf count after which a warning is logged.

    Returns:
        Encoding that is equal for two graphs iff they are isomorphic
        (resp. isomorphic after permuting colors).
    """
    base = {v.id: v.label_key for v in graph.vertices}
    if not mod_color_permutation:
        return _encode(graph.n, _best_key(graph, base, search_limit))

    # Sending the k present colors onto 1..k in some order always beats any
    # other image set, so the k! bijections realise the full-orbit minimum.
    present = sorted(graph.colors_used)
    best = None
    for images in itertools.permutations(range(1, len(present) + 1)):
        sigma = dict(zip(present, images))
        labels = {v: (sigma[c] if c else 0) for v, c in base.items()}
        key = _best_key(graph, labels, search_limit)
        if best is None or key < best:
            best = key
    return _encode(graph.n, best if best is not None else ((), ()))

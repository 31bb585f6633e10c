"""
Random Complex Generator

Seeded random complexes in T_n with a prescribed number of pieces, built by
growing a random colored tree and realizing it with random padding.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from ntree_qi.complex.realize import realize
from ntree_qi.complex.simplicial import SimplicialComplex
from ntree_qi.exceptions import UnsatisfiableOptionsError
from ntree_qi.graphs.colored_graph import ColoredGraph, f_vertex, p_vertex


logger = logging.getLogger(__name__)

# Upper bound on random padding simplices added to each piece
MAX_EXTRA_TIPS = 2


def check_options(
    n: int,
    pieces: int,
    maximally_branched: bool = False,
    colors_used: Optional[int] = None,
) -> None:
    """
    Reject option combinations no complex can meet.

    Raises:
        UnsatisfiableOptionsError: With the reason.
    """
    if n < 1:
        raise UnsatisfiableOptionsError(f"dimension must be >= 1, got {n}")
    if pieces < 1:
        raise UnsatisfiableOptionsError(f"pieces must be >= 1, got {pieces}")

    if colors_used is not None:
        if not 1 <= colors_used <= n + 1:
            raise UnsatisfiableOptionsError(f"colors_used must lie in 1..{n + 1}, got {colors_used}")
        if colors_used > pieces:
            raise UnsatisfiableOptionsError(f"{pieces} pieces cannot use {colors_used} colors")
        if colors_used == 1 and pieces > 1:
            raise UnsatisfiableOptionsError("pieces glued along a simplex need distinct colors")

    if maximally_branched and pieces > 1:
        if (pieces - 1) % n:
            raise UnsatisfiableOptionsError(
                f"maximally branched trees have 1 + {n}*k pieces, got {pieces}"
            )
        if colors_used is not None and colors_used != n + 1:
            raise UnsatisfiableOptionsError("maximally branched complexes use every color")


def random_gamma_tree(
    n: int,
    pieces: int,
    rng: np.random.Generator,
    maximally_branched: bool = False,
    colors_used: Optional[int] = None,
) -> ColoredGraph:
    """
    Grow a random valid colored tree with exactly `pieces` P-vertices.

    Each step either hangs a new F-vertex with a new leaf off a P-vertex, or
    adds a leaf to an F-vertex with spare capacity. In maximally branched mode
    every new F-vertex immediately receives all n+1 colors.
    """
    check_options(n, pieces, maximally_branched, colors_used)

    if colors_used is None:
        palette = list(range(1, n + 2))
    else:
        palette = sorted(int(c) for c in rng.choice(np.arange(1, n + 2), size=colors_used, replace=False))

    colors: List[int] = [int(rng.choice(palette))]
    f_neighbors: Dict[int, List[int]] = {}

    def add_p(color: int, f_index: int) -> None:
        colors.append(color)
        f_neighbors[f_index].append(len(colors) - 1)

    if maximally_branched and pieces > 1:
        for _ in range((pieces - 1) // n):
            anchor = int(rng.integers(len(colors)))
            f_index = len(f_neighbors)
            f_neighbors[f_index] = [anchor]
            for c in palette:
                if c != colors[anchor]:
                    add_p(c, f_index)
    else:
        capacity = min(n + 1, len(palette))
        while len(colors) < pieces:
            unused = [c for c in palette if c not in colors]
            forced = len(unused) >= pieces - len(colors)
            moves = [("new", i) for i in range(len(colors))]
            if not forced:
                moves += [("grow", f) for f, nbrs in f_neighbors.items() if len(nbrs) < capacity]
            kind, index = moves[int(rng.integers(len(moves)))]

            if kind == "new":
                blocked = {colors[index]}
            else:
                blocked = {colors[i] for i in f_neighbors[index]}
            choices = unused if forced else [c for c in palette if c not in blocked]
            color = int(rng.choice(choices))

            if kind == "new":
                f_index = len(f_neighbors)
                f_neighbors[f_index] = [index]
                add_p(color, f_index)
            else:
                add_p(color, index)

    vertices = [p_vertex(f"p{i}", c) for i, c in enumerate(colors)]
    vertices += [f_vertex(f"f{f}") for f in f_neighbors]
    edges = [(f"f{f}", f"p{i}") for f, nbrs in f_neighbors.items() for i in nbrs]
    return ColoredGraph.build(n, vertices, edges)


def generate_random(
    n: int,
    pieces: int,
    seed: int,
    maximally_branched: bool = False,
    colors_used: Optional[int] = None,
) -> SimplicialComplex:
    """
    Seeded random complex in T_n with exactly `pieces` pieces.

    Args:
        n: Dimension.
        pieces: Number of pieces (P-vertices of Γ).
        seed: Unsigned 64-bit seed; equal seeds give equal complexes.
        maximally_branched: Every simplex glued along one or all of its faces.
        colors_used: Exact number of distinct piece colors.

    Raises:
        UnsatisfiableOptionsError: If the options cannot be met.
    """
    rng = np.random.default_rng(seed)
    tree = random_gamma_tree(n, pieces, rng, maximally_branched, colors_used)
    extra = {v.id: int(rng.integers(MAX_EXTRA_TIPS + 1)) for v in tree.p_vertices}
    complex_ = realize(tree, extra_tips=extra)
    logger.debug(f"Generated seed={seed}: {pieces} pieces, {len(complex_)} simplices")
    return complex_

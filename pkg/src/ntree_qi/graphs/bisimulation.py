"""
Bisimulation Module

Bisimilarity of colored graphs, decided by comparing canonical forms of the
unique minimal representatives, with an optional search over P-color
reorderings.
"""

import itertools
import logging
from typing import Dict, Optional

from ntree_qi.graphs.canonical import canonical_form
from ntree_qi.graphs.colored_graph import ColoredGraph, permute_colors
from ntree_qi.graphs.minimize import minimize


logger = logging.getLogger(__name__)

ColorPermutation = Dict[int, int]


def bisimilar(first: ColoredGraph, second: ColoredGraph) -> bool:
    """True iff both graphs weakly cover a common colored graph."""
    if first.n != second.n:
        return False
    return canonical_form(minimize(first).graph) == canonical_form(minimize(second).graph)


def bisimilar_up_to_permutation(first: ColoredGraph, second: ColoredGraph) -> Optional[ColorPermutation]:
    """
    Find a recoloring that makes the second graph bisimilar to the first.

    Only bijections from the colors present in `second` onto those present in
    `first` are tried, in lexicographic order of their images; the remaining
    colors of {1..n+1} are paired off in increasing order.

    Returns:
        The first witnessing permutation of {1..n+1} (as a dict), or None.
    """
    if first.n != second.n:
        return None

    target = minimize(first).graph
    candidate = minimize(second).graph
    if canonical_form(target, True) != canonical_form(candidate, True):
        return None

    expected = canonical_form(target)
    domain = sorted(candidate.colors_used)
    palette = sorted(target.colors_used)
    all_colors = range(1, first.n + 2)

    tried = 0
    for images in itertools.permutations(palette):
        tried += 1
        sigma = dict(zip(domain, images))
        if canonical_form(permute_colors(candidate, sigma)) == expected:
            free_domain = [c for c in all_colors if c not in sigma]
            free_images = [c for c in all_colors if c not in sigma.values()]
            sigma.update(zip(free_domain, free_images))
            logger.debug(f"Witness found after {tried} permutations: {sigma}")
            return dict(sorted(sigma.items()))

    # Unreachable when the permutation-invariant forms agree
    logger.warning("Canonical forms agree up to recoloring but no witness was found")
    return None


def is_identity(sigma: ColorPermutation) -> bool:
    return all(k == v for k, v in sigma.items())

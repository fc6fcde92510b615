"""Minimal transversals (minimal vertex covers) of a hypergraph."""

import logging
from typing import Iterable, List

from symbolique.config import TRANSVERSAL_LIMIT
from symbolique.core.subsets import GroundSubset, SubsetFamily, elements, minimal_sets

logger = logging.getLogger("symbolique")


def minimal_transversals(n: int, edges: Iterable[GroundSubset]) -> SubsetFamily:
    """
    All inclusion-minimal sets meeting every edge.

    Edges are absorbed one at a time: transversals that already meet the new
    edge are kept, the others are extended by each vertex of the edge, and
    the family is reduced to its minimal members.

    Args:
        n: Number of vertices.
        edges: Hyperedges as bitmasks.

    Returns:
        The minimal transversals, sorted ascending. With no edges the empty
        set is the only transversal.
    """
    if n > TRANSVERSAL_LIMIT:
        logger.warning(
            "Minimal transversals on %d vertices (desk-scale limit is %d)",
            n,
            TRANSVERSAL_LIMIT,
        )
    transversals: List[GroundSubset] = [0]
    for edge in sorted(set(edges), key=lambda e: (bin(e).count("1"), e)):
        grown = []
        for t in transversals:
            if t & edge:
                grown.append(t)
            else:
                grown.extend(t | 1 << v for v in elements(edge))
        transversals = list(minimal_sets(grown))
    return minimal_sets(transversals)

"""Balanced chromatic (characteristic) polynomial, regions and circle gains."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Optional

from src.errors import ResourceLimitExceeded
from src.flats.semilattice import enumerate_flats
from src.gains.graph import GainGraph
from src.gains.switching import propagate

from .terms import Polynomial

logger = logging.getLogger(__name__)

SUBSET_EXPANSION_MAX_EDGES = 20


def balanced_chromatic_polynomial(
    graph: GainGraph, *, limit: Optional[int] = None
) -> Polynomial:
    """``sum mu(0, B) * lambda^|pi(B)|`` over the flats ``B`` of ``graph``.

    This is the characteristic polynomial of the matching arrangement. A
    zero-gain loop makes it the zero polynomial.
    """
    if graph.has_zero_loop():
        return Polynomial.zero()
    lattice = enumerate_flats(graph, limit=limit)
    total = Polynomial.zero()
    for flat, mu in lattice:
        total = total + Polynomial.monomial(len(flat.blocks), mu)
    return total


def balanced_chromatic_polynomial_by_subsets(graph: GainGraph) -> Polynomial:
    """The defining expansion ``sum (-1)^|S| lambda^b(S)`` over balanced subsets."""
    edges = graph.edges
    if len(edges) > SUBSET_EXPANSION_MAX_EDGES:
        raise ResourceLimitExceeded(
            f"subset expansion needs at most {SUBSET_EXPANSION_MAX_EDGES} edges, got {len(edges)}",
            limit=SUBSET_EXPANSION_MAX_EDGES,
        )
    counts = [0] * (graph.n + 1)
    for size in range(len(edges) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(edges, size):
            result = propagate(graph.n, subset)
            if result is not None:
                counts[len(result[0])] += sign
    return Polynomial(tuple(counts))


def region_count(graph: GainGraph, *, limit: Optional[int] = None) -> int:
    """Regions of the arrangement: ``(-1)^n p(-1)``."""
    value = balanced_chromatic_polynomial(graph, limit=limit)(-1)
    return -value if graph.n % 2 else value


def max_circle_gain(graph: GainGraph, *, limit: Optional[int] = None) -> int:
    """Largest ``|gain|`` of a circle; 0 when every circle is balanced.

    Each contraction loop of a flat is a circle of the graph read through its
    potential, and every circle shows up that way for the closure of all but
    one of its edges.
    """
    lattice = enumerate_flats(graph, limit=limit)
    return max((max(flat.loop_gains, default=0) for flat in lattice.flats), default=0)


__all__ = [
    "balanced_chromatic_polynomial",
    "balanced_chromatic_polynomial_by_subsets",
    "max_circle_gain",
    "region_count",
]

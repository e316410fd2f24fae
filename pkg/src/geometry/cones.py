"""Weighted decomposition of the positive orthant into relatively open cones.

Each flat ``B`` of the rooting gives the cone of points whose improper set
contains ``B``: top vertices carry strict lower bounds, absorbed vertices are
pinned to their block's representative. With weights ``mu(0, B)`` the cones
cover every proper point once and every improper point zero times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.errors import InvalidInput
from src.flats.semilattice import enumerate_flats, rooted_heights
from src.gains.graph import GainGraph, RootedGainGraph, rooting
from src.gains.switching import coloring_map


@dataclass(frozen=True)
class Cone:
    """``top_bounds[i] = h`` means ``x_i > h``; ``equations[j] = (i, g)`` means ``x_j = x_i - g``."""

    weight: int
    top_bounds: Mapping[int, int]
    equations: Mapping[int, Tuple[int, int]]

    def contains(self, point: Mapping[int, int]) -> bool:
        if any(point[v] <= h for v, h in self.top_bounds.items()):
            return False
        return all(point[j] == point[i] - g for j, (i, g) in self.equations.items())


def cone_decomposition(
    graph: GainGraph | RootedGainGraph, *, limit: Optional[int] = None
) -> List[Cone]:
    """One cone per flat, in flat order; empty when a zero-gain loop kills every point."""
    rooted = graph if isinstance(graph, RootedGainGraph) else rooting(graph)
    if rooted.graph.has_zero_loop():
        return []
    cones = []
    for flat, mu in enumerate_flats(rooted.graph, limit=limit):
        heights = rooted_heights(rooted, flat)
        top_bounds: Dict[int, int] = {}
        equations: Dict[int, Tuple[int, int]] = {}
        for block in flat.blocks:
            rep = min(v for v in block if flat.potential[v - 1] == 0)
            top_bounds[rep] = heights[block]
            for v in block:
                if v != rep:
                    equations[v] = (rep, -flat.potential[v - 1])
        cones.append(Cone(weight=mu, top_bounds=top_bounds, equations=equations))
    return cones


def point_total_weight(
    cones: Sequence[Cone], point: Sequence[int] | Mapping[int, int], graph: GainGraph
) -> int:
    """Total weight of the cones holding an integer point of the open orthant."""
    x = coloring_map(graph.n, point)
    nonpositive = [v for v, c in x.items() if c <= 0]
    if nonpositive:
        raise InvalidInput(f"point must have positive coordinates, got {x}")
    return sum(cone.weight for cone in cones if cone.contains(x))


__all__ = ["Cone", "cone_decomposition", "point_total_weight"]

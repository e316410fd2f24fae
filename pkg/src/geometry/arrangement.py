"""Integral affinographic arrangements and their gain graphs.

The hyperplane ``x_j - x_i = g`` is the edge ``g e_ij``; the hyperplanes
``(i, j, g)`` and ``(j, i, -g)`` coincide, so they are stored with ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from src.errors import InvalidInput
from src.gains.graph import GainGraph, Triple


@dataclass(frozen=True, slots=True)
class Arrangement:
    n: int
    hyperplanes: Tuple[Triple, ...]

    @classmethod
    def build(cls, n: int, hyperplanes: Iterable[Sequence[int]] = ()) -> "Arrangement":
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidInput(f"dimension must be a non-negative integer, got {n!r}")
        canonical = set()
        for entry in hyperplanes:
            if len(entry) != 3:
                raise InvalidInput(f"hyperplane must be [i, j, g], got {list(entry)!r}")
            i, j, g = (int(v) for v in entry)
            if i == j:
                raise InvalidInput(f"hyperplane needs two coordinates, got x_{i} - x_{j}")
            for index in (i, j):
                if not 1 <= index <= n:
                    raise InvalidInput(f"coordinate {index} out of range 1..{n}")
            canonical.add((i, j, g) if i < j else (j, i, -g))
        return cls(n, tuple(sorted(canonical)))

    def __len__(self) -> int:
        return len(self.hyperplanes)


def arrangement_to_gain_graph(arrangement: Arrangement) -> GainGraph:
    return GainGraph.build(arrangement.n, arrangement.hyperplanes)


def gain_graph_to_arrangement(graph: GainGraph) -> Arrangement:
    """Inverse translation; a loop has no hyperplane."""
    if graph.loops:
        raise InvalidInput(
            "a graph with loops has no arrangement",
            data={"loops": [e.as_triple() for e in graph.loops]},
        )
    return Arrangement.build(graph.n, (e.as_triple() for e in graph.edges))


__all__ = ["Arrangement", "arrangement_to_gain_graph", "gain_graph_to_arrangement"]

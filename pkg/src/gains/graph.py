"""Integral gain graphs and rooted integral gain graphs.

Vertices are the indices ``1..n``. An edge ``g e_ij`` says that a coloration
``x`` is improper on it when ``x_j == x_i + g``; reversing the edge negates the
gain, so every edge is stored once with ``tail <= head``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from src.errors import InvalidInput, UnknownEdge

Triple = Tuple[int, int, int]


@dataclass(frozen=True, slots=True, order=True)
class Edge:
    tail: int
    head: int
    gain: int

    @classmethod
    def make(cls, tail: int, head: int, gain: int) -> "Edge":
        """Return the canonical record for ``gain e_{tail,head}``."""
        if tail > head:
            tail, head, gain = head, tail, -gain
        if tail == head:
            gain = abs(gain)
        return cls(int(tail), int(head), int(gain))

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def gain_from(self, vertex: int) -> int:
        """Gain of the edge read in the direction leaving ``vertex``."""
        if vertex == self.tail:
            return self.gain
        if vertex == self.head:
            return -self.gain
        raise UnknownEdge(f"vertex {vertex} is not an endpoint of {self}")

    def other(self, vertex: int) -> int:
        return self.head if vertex == self.tail else self.tail

    def as_triple(self) -> Triple:
        return (self.tail, self.head, self.gain)

    def __str__(self) -> str:
        return f"{self.gain}e{self.tail}{self.head}"


def _check_vertex(n: int, vertex: int) -> None:
    if isinstance(vertex, bool) or not isinstance(vertex, int):
        raise InvalidInput(f"vertex index must be an integer, got {vertex!r}")
    if not 1 <= vertex <= n:
        raise InvalidInput(f"vertex index {vertex} out of range 1..{n}")


@dataclass(frozen=True, slots=True)
class GainGraph:
    n: int
    edges: Tuple[Edge, ...] = ()
    # Number of input records collapsed into each stored edge. Provenance only.
    multiplicity: Tuple[int, ...] = field(default=(), compare=False, hash=False)

    @classmethod
    def build(cls, n: int, triples: Iterable[Sequence[int] | Edge] = ()) -> "GainGraph":
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidInput(f"vertex count must be a non-negative integer, got {n!r}")
        counts: Dict[Edge, int] = {}
        for item in triples:
            if isinstance(item, Edge):
                i, j, g = item.as_triple()
            else:
                try:
                    i, j, g = item
                except (TypeError, ValueError):
                    raise InvalidInput(f"edge must be an [i, j, g] triple, got {item!r}") from None
            _check_vertex(n, i)
            _check_vertex(n, j)
            if isinstance(g, bool) or not isinstance(g, int):
                raise InvalidInput(f"edge gain must be an integer, got {g!r}")
            edge = Edge.make(i, j, g)
            counts[edge] = counts.get(edge, 0) + 1
        ordered = tuple(sorted(counts))
        return cls(n, ordered, tuple(counts[e] for e in ordered))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def links(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if not e.is_loop)

    @property
    def loops(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_loop)

    def has_zero_loop(self) -> bool:
        return any(e.is_loop and e.gain == 0 for e in self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self._positions()

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def _positions(self) -> Mapping[Edge, int]:
        return {edge: idx for idx, edge in enumerate(self.edges)}

    def resolve(self, subset: Iterable[Edge | Sequence[int]]) -> Tuple[Edge, ...]:
        """Return the stored edges named by ``subset``; raise on unknown ones."""
        positions = self._positions()
        resolved: List[Edge] = []
        for item in subset:
            edge = item if isinstance(item, Edge) else Edge.make(*item)
            if edge not in positions:
                raise UnknownEdge(f"edge {edge} is not in the graph", data={"edge": edge.as_triple()})
            resolved.append(edge)
        return tuple(sorted(set(resolved)))

    def mask_of(self, subset: Iterable[Edge | Sequence[int]]) -> int:
        positions = self._positions()
        mask = 0
        for edge in self.resolve(subset):
            mask |= 1 << positions[edge]
        return mask

    def edges_of(self, mask: int) -> Tuple[Edge, ...]:
        return tuple(e for idx, e in enumerate(self.edges) if mask >> idx & 1)

    def without(self, edge: Edge | Sequence[int]) -> "GainGraph":
        (target,) = self.resolve([edge])
        kept = [(e, c) for e, c in zip(self.edges, self._counts()) if e != target]
        return GainGraph(self.n, tuple(e for e, _ in kept), tuple(c for _, c in kept))

    def reduce_mod(self, modulus: int) -> "GainGraph":
        """Gains read in ``Z_modulus``, stored as residues in ``[0, modulus)``."""
        if modulus < 1:
            raise InvalidInput(f"modulus must be positive, got {modulus}")
        counts: Dict[Edge, int] = {}
        for edge, count in zip(self.edges, self._counts()):
            residue = edge.gain % modulus
            if edge.is_loop:
                residue = min(residue, (-residue) % modulus)
            reduced = Edge(edge.tail, edge.head, residue)
            counts[reduced] = counts.get(reduced, 0) + count
        ordered = tuple(sorted(counts))
        return GainGraph(self.n, ordered, tuple(counts[e] for e in ordered))

    def _counts(self) -> Tuple[int, ...]:
        if len(self.multiplicity) == len(self.edges):
            return self.multiplicity
        return (1,) * len(self.edges)

    @property
    def key(self) -> Tuple[int, Tuple[Triple, ...]]:
        return (self.n, tuple(e.as_triple() for e in self.edges))

    def __str__(self) -> str:
        body = ", ".join(str(e) for e in self.edges)
        return f"GainGraph(n={self.n}, {{{body}}})"


@dataclass(frozen=True, slots=True)
class RootedGainGraph:
    """A gain graph plus an implicit root colored 0.

    The root edges to ``v_i`` carry the gains ``(-inf, h_i]``, so a proper
    coloration must give ``v_i`` a color greater than ``bounds[i - 1]``.
    """

    graph: GainGraph
    bounds: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bounds) != self.graph.n:
            raise InvalidInput(
                f"expected {self.graph.n} bounds, got {len(self.bounds)}"
            )
        for value in self.bounds:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidInput(f"bound must be an integer, got {value!r}")

    @classmethod
    def build(
        cls, graph: GainGraph, bounds: Sequence[int] | Mapping[int, int]
    ) -> "RootedGainGraph":
        if isinstance(bounds, Mapping):
            values = tuple(int(bounds.get(v, 0)) for v in graph.vertices)
        else:
            values = tuple(bounds)
        return cls(graph, values)

    @property
    def n(self) -> int:
        return self.graph.n

    def bound(self, vertex: int) -> int:
        return self.bounds[vertex - 1]

    @property
    def key(self) -> Tuple[object, ...]:
        return (self.graph.key, self.bounds)


def rooting(graph: GainGraph) -> RootedGainGraph:
    """Adjoin a root whose edges carry every non-positive gain: colors >= 1."""
    return RootedGainGraph(graph, (0,) * graph.n)


def delete_edge(
    graph: GainGraph | RootedGainGraph, edge: Edge | Sequence[int]
) -> GainGraph | RootedGainGraph:
    if isinstance(graph, RootedGainGraph):
        return RootedGainGraph(graph.graph.without(edge), graph.bounds)
    return graph.without(edge)


__all__ = [
    "Edge",
    "GainGraph",
    "RootedGainGraph",
    "Triple",
    "delete_edge",
    "rooting",
]

"""Balance, potentials, switching and contraction of integral gain graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.errors import InvalidInput, UnbalancedEdgeSet

from .graph import Edge, GainGraph, RootedGainGraph

Blocks = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class SwitchingFunction:
    """A total vertex function ``eta``; ``values[i - 1]`` is ``eta_i``."""

    values: Tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> "SwitchingFunction":
        return cls((0,) * n)

    @classmethod
    def of(cls, n: int, values: Sequence[int] | Mapping[int, int]) -> "SwitchingFunction":
        if isinstance(values, Mapping):
            return cls(tuple(int(values.get(v, 0)) for v in range(1, n + 1)))
        if len(values) != n:
            raise InvalidInput(f"switching function must have {n} values, got {len(values)}")
        return cls(tuple(int(v) for v in values))

    def __getitem__(self, vertex: int) -> int:
        return self.values[vertex - 1]

    def __add__(self, other: "SwitchingFunction") -> "SwitchingFunction":
        return SwitchingFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "SwitchingFunction":
        return SwitchingFunction(tuple(-a for a in self.values))


@dataclass(frozen=True, slots=True)
class Potential:
    """A partial vertex function ``theta`` with ``g == theta_j - theta_i`` on its set."""

    values: Mapping[int, int]

    def __getitem__(self, vertex: int) -> int:
        return self.values[vertex]

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.values

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self.values.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Potential):
            return dict(self.values) == dict(other.values)
        if isinstance(other, Mapping):
            return dict(self.values) == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.items()))


def propagate(
    n: int, edges: Iterable[Edge], *, modulus: Optional[int] = None
) -> Optional[Tuple[Blocks, Dict[int, int]]]:
    """Breadth-first potential propagation over ``edges`` on vertices ``1..n``.

    Returns the blocks of the induced partition (singletons included, sorted
    by least vertex) and a raw potential, or ``None`` when some circle has
    non-zero gain (modulo ``modulus`` when given).
    """
    adjacency: Dict[int, List[Edge]] = {v: [] for v in range(1, n + 1)}
    for edge in edges:
        if edge.is_loop:
            gain = edge.gain % modulus if modulus else edge.gain
            if gain != 0:
                return None
            continue
        adjacency[edge.tail].append(edge)
        adjacency[edge.head].append(edge)

    theta: Dict[int, int] = {}
    blocks: List[Tuple[int, ...]] = []
    for start in range(1, n + 1):
        if start in theta:
            continue
        theta[start] = 0
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for edge in adjacency[u]:
                v = edge.other(u)
                expected = theta[u] + edge.gain_from(u)
                if modulus:
                    expected %= modulus
                if v not in theta:
                    theta[v] = expected
                    members.append(v)
                    queue.append(v)
                elif theta[v] != expected:
                    return None
        blocks.append(tuple(sorted(members)))
    return tuple(blocks), theta


def is_balanced(
    graph: GainGraph, subset: Iterable[Edge | Sequence[int]], *, modulus: Optional[int] = None
) -> Optional[Potential]:
    """Return a potential certifying that ``subset`` is balanced, else ``None``.

    The potential is defined on the vertices touched by ``subset``; each
    component's least value is 0 (for modular gains, its least vertex gets 0).
    """
    edges = graph.resolve(subset)
    result = propagate(graph.n, edges, modulus=modulus)
    if result is None:
        return None
    blocks, theta = result
    support = {v for e in edges for v in (e.tail, e.head)}
    values: Dict[int, int] = {}
    for block in blocks:
        if block[0] not in support:
            continue
        base = theta[block[0]] if modulus else min(theta[v] for v in block)
        for v in block:
            values[v] = (theta[v] - base) % modulus if modulus else theta[v] - base
    return Potential(values)


def switch(
    graph: GainGraph | RootedGainGraph, eta: SwitchingFunction | Sequence[int]
) -> GainGraph | RootedGainGraph:
    """Replace each gain ``g_ij`` by ``g_ij + eta_j - eta_i``; bounds gain ``eta_i``."""
    base = graph.graph if isinstance(graph, RootedGainGraph) else graph
    if not isinstance(eta, SwitchingFunction):
        eta = SwitchingFunction.of(base.n, eta)
    if len(eta.values) != base.n:
        raise InvalidInput(f"switching function must have {base.n} values")
    switched = GainGraph.build(
        base.n,
        ((e.tail, e.head, e.gain + eta[e.head] - eta[e.tail]) for e in base.edges),
    )
    if isinstance(graph, RootedGainGraph):
        bounds = tuple(h + eta[v] for v, h in zip(base.vertices, graph.bounds))
        return RootedGainGraph(switched, bounds)
    return switched


def top_vertex_switching(
    graph: GainGraph, subset: Iterable[Edge | Sequence[int]]
) -> SwitchingFunction:
    """``eta_j`` is the largest gain of a path in ``subset`` starting at ``v_j``."""
    edges = graph.resolve(subset)
    result = propagate(graph.n, edges)
    if result is None:
        raise UnbalancedEdgeSet("edge set is not balanced", data={"edges": [e.as_triple() for e in edges]})
    blocks, theta = result
    return SwitchingFunction(_top_switching(graph.n, blocks, theta))


def _top_switching(n: int, blocks: Blocks, theta: Mapping[int, int]) -> Tuple[int, ...]:
    values = [0] * n
    for block in blocks:
        top = max(theta[v] for v in block)
        for v in block:
            values[v - 1] = top - theta[v]
    return tuple(values)


def contract(
    graph: GainGraph | RootedGainGraph, subset: Iterable[Edge | Sequence[int]]
) -> GainGraph | RootedGainGraph:
    """Contract a balanced edge set after top-vertex switching.

    Each block collapses to its least-indexed top vertex; the survivors are
    renumbered ``1..k`` in increasing order. Edges of ``subset`` vanish, the
    other edges keep their switched gains (edges inside a block become loops).
    A rooted block takes the bound ``max(h_j + eta_j)`` over its members.
    """
    base = graph.graph if isinstance(graph, RootedGainGraph) else graph
    removed = set(base.resolve(subset))
    if not removed:
        return graph
    result = propagate(base.n, removed)
    if result is None:
        raise UnbalancedEdgeSet(
            "cannot contract an unbalanced edge set",
            data={"edges": [e.as_triple() for e in sorted(removed)]},
        )
    blocks, theta = result
    eta = _top_switching(base.n, blocks, theta)

    representative: Dict[int, int] = {}
    for block in blocks:
        rep = min(v for v in block if eta[v - 1] == 0)
        for v in block:
            representative[v] = rep
    survivors = sorted({representative[v] for v in base.vertices})
    renumber = {old: new for new, old in enumerate(survivors, start=1)}

    triples = []
    for edge in base.edges:
        if edge in removed:
            continue
        gain = edge.gain + eta[edge.head - 1] - eta[edge.tail - 1]
        triples.append(
            (renumber[representative[edge.tail]], renumber[representative[edge.head]], gain)
        )
    contracted = GainGraph.build(len(survivors), triples)
    if not isinstance(graph, RootedGainGraph):
        return contracted

    bounds = [0] * len(survivors)
    for block in blocks:
        rep = renumber[representative[block[0]]]
        bounds[rep - 1] = max(graph.bound(v) + eta[v - 1] for v in block)
    return RootedGainGraph(contracted, tuple(bounds))


def improper_edges(
    graph: GainGraph,
    coloration: Sequence[int] | Mapping[int, int],
    *,
    modulus: Optional[int] = None,
) -> FrozenSet[Edge]:
    """The edges ``g e_ij`` with ``x_j == x_i + g`` (modulo ``modulus`` when given)."""
    x = coloring_map(graph.n, coloration)
    improper = set()
    for edge in graph.edges:
        difference = x[edge.head] - x[edge.tail] - edge.gain
        if edge.is_loop:
            difference = edge.gain
        if (difference % modulus if modulus else difference) == 0:
            improper.add(edge)
    return frozenset(improper)


def coloring_map(n: int, coloration: Sequence[int] | Mapping[int, int]) -> Dict[int, int]:
    if isinstance(coloration, Mapping):
        missing = [v for v in range(1, n + 1) if v not in coloration]
        if missing:
            raise InvalidInput(f"coloration is missing vertices {missing}")
        return {v: int(coloration[v]) for v in range(1, n + 1)}
    if len(coloration) != n:
        raise InvalidInput(f"coloration must have {n} values, got {len(coloration)}")
    return {v: int(c) for v, c in zip(range(1, n + 1), coloration)}


__all__ = [
    "Blocks",
    "Potential",
    "SwitchingFunction",
    "coloring_map",
    "contract",
    "improper_edges",
    "is_balanced",
    "propagate",
    "switch",
    "top_vertex_switching",
]

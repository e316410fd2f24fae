"""The semilattice of closed balanced edge sets and its Möbius function."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.config import settings
from src.errors import FlatLimitExceeded, UnbalancedEdgeSet
from src.gains.graph import Edge, GainGraph, RootedGainGraph
from src.gains.switching import Blocks, SwitchingFunction, propagate

logger = logging.getLogger(__name__)

FlatKey = Tuple[Tuple[Tuple[int, int], ...], ...]


@dataclass(frozen=True, slots=True)
class BalancedFlat:
    """A closed balanced edge set together with its contraction data.

    ``potential[v - 1]`` is 0 on top vertices and negative elsewhere (it is
    minus the top-vertex switching function). Flats of a modular graph use
    residues instead, with the least vertex of each block at 0, and carry no
    heights.
    """

    mask: int
    edges: FrozenSet[Edge]
    blocks: Blocks
    potential: Tuple[int, ...]
    heights: Tuple[int, ...]
    loop_gains: Tuple[int, ...]
    key: FlatKey

    @property
    def rank(self) -> int:
        return len(self.potential) - len(self.blocks)

    @property
    def switching(self) -> SwitchingFunction:
        return SwitchingFunction(tuple(-p for p in self.potential))

    def height_of(self, block: Sequence[int]) -> int:
        return self.heights[self.blocks.index(tuple(block))]

    def block_of(self, vertex: int) -> Tuple[int, ...]:
        for block in self.blocks:
            if vertex in block:
                return block
        raise KeyError(vertex)


@dataclass(frozen=True)
class FlatSemilattice:
    """Flats sorted by ``(rank, key)`` with ``mobius[i] == mu(bottom, flats[i])``."""

    graph: GainGraph
    flats: Tuple[BalancedFlat, ...]
    mobius: Tuple[int, ...]
    modulus: Optional[int] = None

    @property
    def bottom(self) -> BalancedFlat:
        return self.flats[0]

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self) -> Iterator[Tuple[BalancedFlat, int]]:
        return iter(zip(self.flats, self.mobius))

    def leq(self, lower: BalancedFlat, upper: BalancedFlat) -> bool:
        return lower.mask & upper.mask == lower.mask

    def find(self, edges: Iterable[Edge | Sequence[int]]) -> BalancedFlat:
        mask = self.graph.mask_of(edges)
        for flat in self.flats:
            if flat.mask == mask:
                return flat
        raise KeyError("edge set is not a flat of this graph")

    def mobius_of(self, flat: BalancedFlat) -> int:
        return self.mobius[self.flats.index(flat)]


def _normalize(
    blocks: Blocks, theta: Mapping[int, int], n: int, modulus: Optional[int]
) -> Tuple[Tuple[int, ...], FlatKey]:
    potential = [0] * n
    key = []
    for block in blocks:
        if modulus:
            base = theta[block[0]]
            values = [(theta[v] - base) % modulus for v in block]
        else:
            top = max(theta[v] for v in block)
            values = [theta[v] - top for v in block]
        for v, value in zip(block, values):
            potential[v - 1] = value
        key.append(tuple(zip(block, values)))
    return tuple(potential), tuple(key)


def _build_flat(
    graph: GainGraph, blocks: Blocks, theta: Mapping[int, int], modulus: Optional[int]
) -> BalancedFlat:
    potential, key = _normalize(blocks, theta, graph.n, modulus)
    block_index = {v: i for i, block in enumerate(blocks) for v in block}
    mask = 0
    members = []
    loop_gains = []
    for idx, edge in enumerate(graph.edges):
        if block_index[edge.tail] != block_index[edge.head]:
            continue
        excess = edge.gain - (potential[edge.head - 1] - potential[edge.tail - 1])
        if modulus:
            excess %= modulus
            excess = min(excess, modulus - excess) if excess else 0
        if excess == 0:
            mask |= 1 << idx
            members.append(edge)
        if edge.is_loop or excess != 0:
            # Loops of the contraction: every loop of the graph plus the
            # absorbed links that the flat leaves out.
            loop_gains.append(abs(excess))
    if modulus:
        heights = (0,) * len(blocks)
    else:
        heights = tuple(-min(potential[v - 1] for v in block) for block in blocks)
    return BalancedFlat(
        mask=mask,
        edges=frozenset(members),
        blocks=blocks,
        potential=potential,
        heights=heights,
        loop_gains=tuple(sorted(loop_gains)),
        key=key,
    )


def closure(
    graph: GainGraph, subset: Iterable[Edge | Sequence[int]] = (), *, modulus: Optional[int] = None
) -> BalancedFlat:
    """Smallest closed balanced set containing a balanced ``subset``."""
    edges = graph.resolve(subset)
    result = propagate(graph.n, edges, modulus=modulus)
    if result is None:
        raise UnbalancedEdgeSet(
            "cannot close an unbalanced edge set",
            data={"edges": [e.as_triple() for e in edges]},
        )
    blocks, theta = result
    return _build_flat(graph, blocks, theta, modulus)


def _join_link(
    graph: GainGraph, flat: BalancedFlat, edge: Edge, modulus: Optional[int]
) -> BalancedFlat:
    theta = {v: flat.potential[v - 1] for v in graph.vertices}
    lower = flat.block_of(edge.tail)
    upper = flat.block_of(edge.head)
    shift = theta[edge.tail] + edge.gain - theta[edge.head]
    for v in upper:
        theta[v] += shift
        if modulus:
            theta[v] %= modulus
    merged = tuple(sorted(lower + upper))
    blocks = tuple(
        sorted([b for b in flat.blocks if b not in (lower, upper)] + [merged])
    )
    return _build_flat(graph, blocks, theta, modulus)


def enumerate_flats(
    graph: GainGraph, *, modulus: Optional[int] = None, limit: Optional[int] = None
) -> FlatSemilattice:
    """Enumerate every closed balanced set of ``graph`` and its Möbius value.

    Flats are discovered breadth-first by joining one link across two blocks
    and closing; a flat is identified by its partition and normalized
    potential. ``modulus`` reads the gains in ``Z_modulus``.
    """
    if limit is None:
        limit = settings.LIMIT_FLATS
    if modulus:
        graph = graph.reduce_mod(modulus)
    bottom = closure(graph, (), modulus=modulus)
    seen: Dict[FlatKey, BalancedFlat] = {bottom.key: bottom}
    queue = deque([bottom])
    links = graph.links
    while queue:
        flat = queue.popleft()
        for edge in links:
            if edge in flat.edges or edge.head in flat.block_of(edge.tail):
                continue
            joined = _join_link(graph, flat, edge, modulus)
            if joined.key in seen:
                continue
            seen[joined.key] = joined
            if len(seen) > limit:
                logger.warning("flats.enumerate limit", extra={"limit": limit, "n": graph.n})
                raise FlatLimitExceeded(
                    f"more than {limit} balanced flats", limit=limit, data={"n": graph.n}
                )
            queue.append(joined)

    flats = tuple(sorted(seen.values(), key=lambda f: (f.rank, f.key)))
    mobius = _mobius(flats)
    logger.info(
        "flats.enumerate done",
        extra={"n": graph.n, "edges": len(graph.edges), "count": len(flats), "modulus": modulus},
    )
    return FlatSemilattice(graph=graph, flats=flats, mobius=mobius, modulus=modulus)


def _mobius(flats: Sequence[BalancedFlat]) -> Tuple[int, ...]:
    masks = [f.mask for f in flats]
    position = {mask: i for i, mask in enumerate(masks)}
    bottom_mask = masks[0]

    def lower_interval(i: int) -> List[int]:
        mask = masks[i]
        free = mask & ~bottom_mask
        if 1 << bin(free).count("1") < i:
            below = []
            sub = free
            while True:
                j = position.get(sub | bottom_mask)
                if j is not None and j != i:
                    below.append(j)
                if sub == 0:
                    break
                sub = (sub - 1) & free
            return below
        return [j for j in range(i) if masks[j] & mask == masks[j]]

    @cache
    def mu(i: int) -> int:
        if i == 0:
            return 1
        return -sum(mu(j) for j in lower_interval(i))

    return tuple(mu(i) for i in range(len(flats)))


def mobius_sum_below(lattice: FlatSemilattice, edges: Iterable[Edge | Sequence[int]]) -> int:
    """Sum of ``mu(bottom, A)`` over the flats ``A`` contained in ``edges``."""
    mask = lattice.graph.mask_of(edges)
    return sum(mu for flat, mu in lattice if flat.mask & mask == flat.mask)


def rooted_heights(rooted: RootedGainGraph, flat: BalancedFlat) -> Dict[Tuple[int, ...], int]:
    """Per block, the largest ``h_j + eta_j`` with ``eta`` the top-vertex switching."""
    return {
        block: max(rooted.bound(v) - flat.potential[v - 1] for v in block)
        for block in flat.blocks
    }


__all__ = [
    "BalancedFlat",
    "FlatKey",
    "FlatSemilattice",
    "closure",
    "enumerate_flats",
    "mobius_sum_below",
    "rooted_heights",
]

"""Integral chromatic function: Möbius expansion and deletion–contraction."""

from __future__ import annotations

import logging
from math import prod
from typing import Dict, List, Mapping, Optional, Sequence

import networkx as nx

from src.errors import InvalidInput
from src.flats.semilattice import enumerate_flats, rooted_heights
from src.gains.graph import GainGraph, RootedGainGraph, delete_edge, rooting
from src.gains.switching import Blocks, contract

from .terms import TermSum

logger = logging.getLogger(__name__)


def _as_rooted(graph: GainGraph | RootedGainGraph) -> RootedGainGraph:
    return graph if isinstance(graph, RootedGainGraph) else rooting(graph)


def integral_terms(
    graph: GainGraph | RootedGainGraph, *, limit: Optional[int] = None
) -> TermSum:
    """One term per flat of the nonroot graph: ``mu`` and the sorted rooted heights.

    An unrooted graph is counted through its rooting (colors ``1..m``).
    """
    rooted = _as_rooted(graph)
    if rooted.graph.has_zero_loop():
        return TermSum(rooted.n, ())
    lattice = enumerate_flats(rooted.graph, limit=limit)
    signed = (
        (tuple(rooted_heights(rooted, flat).values()), mu) for flat, mu in lattice
    )
    terms = TermSum.from_signed(rooted.n, signed)
    logger.info(
        "chromatic.terms done",
        extra={"n": rooted.n, "flats": len(lattice), "terms": len(terms.terms)},
    )
    return terms


def integral_chromatic(
    graph: GainGraph | RootedGainGraph, m: int, *, limit: Optional[int] = None
) -> int:
    """Proper colorations with colors in ``[m]`` (rooted: in ``(h_i, m]``)."""
    return integral_terms(graph, limit=limit).evaluate(m)


def integral_chromatic_dc(graph: GainGraph | RootedGainGraph, m: int) -> int:
    """Deletion minus contraction on nonroot links, memoized per call.

    Components of the link graph are counted separately (root edges never
    tie them together) and nonzero-gain loops are dropped: they are never
    improper for integer colors.
    """
    memo: Dict[object, int] = {}

    def count(rooted: RootedGainGraph) -> int:
        if rooted.graph.has_zero_loop():
            return 0
        return prod(count_connected(part) for part in _components(rooted))

    def count_connected(rooted: RootedGainGraph) -> int:
        key = rooted.key
        if key in memo:
            return memo[key]
        link = next((e for e in rooted.graph.edges if not e.is_loop), None)
        if link is None:
            value = max(m - rooted.bound(1), 0)
        else:
            value = count(delete_edge(rooted, link)) - count(contract(rooted, [link]))
        memo[key] = value
        return value

    value = count(_as_rooted(graph))
    logger.debug("chromatic.dc done", extra={"m": m, "memo_size": len(memo)})
    return value


def _components(rooted: RootedGainGraph) -> List[RootedGainGraph]:
    """Split into connected pieces, each renumbered ``1..k``, loops dropped."""
    graph = rooted.graph
    blocks = _link_blocks(graph)
    parts: List[RootedGainGraph] = []
    for block in blocks:
        renumber = {old: new for new, old in enumerate(block, start=1)}
        triples = [
            (renumber[e.tail], renumber[e.head], e.gain)
            for e in graph.links
            if e.tail in renumber
        ]
        parts.append(
            RootedGainGraph(
                GainGraph.build(len(block), triples),
                tuple(rooted.bound(v) for v in block),
            )
        )
    return parts


def _link_blocks(graph: GainGraph) -> Blocks:
    skeleton = nx.Graph()
    skeleton.add_nodes_from(graph.vertices)
    skeleton.add_edges_from((e.tail, e.head) for e in graph.links)
    return tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(skeleton)))


def interval_chromatic(
    graph: GainGraph,
    bounds: Sequence[int] | Mapping[int, int],
    m: int,
    *,
    limit: Optional[int] = None,
) -> int:
    """Proper colorations of a zero-gain graph with ``v_i`` colored in ``(h_i, m]``."""
    nonzero = [e.as_triple() for e in graph.edges if e.gain != 0]
    if nonzero:
        raise InvalidInput("interval coloring needs a zero-gain graph", data={"edges": nonzero})
    rooted = RootedGainGraph.build(graph, bounds)
    return integral_terms(rooted, limit=limit).evaluate(m)


__all__ = [
    "integral_chromatic",
    "integral_chromatic_dc",
    "integral_terms",
    "interval_chromatic",
]

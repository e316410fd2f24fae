"""Forests without broken balanced circles: an independent count of |mu|."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Sequence

import networkx as nx
from networkx.utils import UnionFind

from src.errors import InvalidInput
from src.gains.graph import Edge, GainGraph

from .semilattice import BalancedFlat


def nbc_forest_count(graph: GainGraph, flat: BalancedFlat, ordering: Sequence[Edge]) -> int:
    """Count forests ``F`` inside ``flat`` spanning its partition and containing no
    balanced circle of ``graph`` minus that circle's last edge under ``ordering``.

    Zero-gain loops lie in every flat and are left out of the count.
    """
    order = {edge: position for position, edge in enumerate(ordering)}
    if len(order) != len(ordering) or set(order) != set(graph.edges):
        raise InvalidInput("ordering must list every edge of the graph exactly once")

    links = sorted((e for e in flat.edges if not e.is_loop), key=order.__getitem__)
    candidates = graph.links
    count = 0
    for forest in combinations(links, flat.rank):
        if _spans(forest) and not _holds_broken_circle(forest, candidates, order):
            count += 1
    return count


def _spans(forest: Sequence[Edge]) -> bool:
    components = UnionFind()
    for edge in forest:
        if components[edge.tail] == components[edge.head]:
            return False
        components.union(edge.tail, edge.head)
    # rank-many acyclic edges inside the blocks cover each block exactly
    return True


def _holds_broken_circle(
    forest: Sequence[Edge], candidates: Sequence[Edge], order: Dict[Edge, int]
) -> bool:
    tree = nx.Graph()
    for edge in forest:
        tree.add_edge(edge.tail, edge.head, record=edge)
    members = set(forest)
    for edge in candidates:
        if edge in members or edge.tail not in tree or edge.head not in tree:
            continue
        if not nx.has_path(tree, edge.tail, edge.head):
            continue
        path = nx.shortest_path(tree, edge.tail, edge.head)
        gain = 0
        latest = -1
        for u, v in zip(path, path[1:]):
            record: Edge = tree.edges[u, v]["record"]
            gain += record.gain_from(u)
            latest = max(latest, order[record])
        if gain == edge.gain and latest < order[edge]:
            return True
    return False


__all__ = ["nbc_forest_count"]

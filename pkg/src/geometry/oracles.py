"""Brute-force coloration counts, used as ground truth for every engine."""

from __future__ import annotations

import logging
from itertools import product
from math import prod
from typing import Mapping, Optional, Sequence

from src.config import settings
from src.errors import InvalidInput, OracleBudgetExceeded
from src.gains.graph import GainGraph, RootedGainGraph

logger = logging.getLogger(__name__)


def _check_budget(kind: str, points: int, limit: Optional[int]) -> None:
    if limit is None:
        limit = settings.LIMIT_POINTS
    if points >= limit:
        logger.warning("oracle.budget exceeded", extra={"kind": kind, "points": points, "limit": limit})
        raise OracleBudgetExceeded(
            f"{kind} oracle would visit {points} colorations (budget {limit})",
            limit=limit,
            data={"points": str(points)},
        )
    logger.debug(f"oracle.{kind} start", extra={"points": points})


def _links(graph: GainGraph):
    return [(e.tail - 1, e.head - 1, e.gain) for e in graph.links]


def oracle_integral(graph: GainGraph, m: int, *, limit: Optional[int] = None) -> int:
    """Points of ``[m]^n`` on none of the hyperplanes ``x_j - x_i = g``."""
    if m <= 0:
        return 0 if graph.n else 1
    _check_budget("integral", m**graph.n, limit)
    if graph.has_zero_loop():
        return 0
    links = _links(graph)
    return sum(
        1
        for x in product(range(1, m + 1), repeat=graph.n)
        if all(x[h] - x[t] != g for t, h, g in links)
    )


def oracle_modular(graph: GainGraph, m: int, *, limit: Optional[int] = None) -> int:
    """Colorations in ``Z_m^n`` that are proper with gains read modulo ``m``."""
    if m < 1:
        raise InvalidInput(f"modulus must be positive, got {m}")
    _check_budget("modular", m**graph.n, limit)
    if any(e.gain % m == 0 for e in graph.loops):
        return 0
    links = _links(graph)
    return sum(
        1
        for x in product(range(m), repeat=graph.n)
        if all((x[h] - x[t] - g) % m for t, h, g in links)
    )


def oracle_rooted(rooted: RootedGainGraph, m: int, *, limit: Optional[int] = None) -> int:
    """Proper colorations with ``x_i`` in ``(h_i, m]``."""
    ranges = [range(h + 1, m + 1) for h in rooted.bounds]
    _check_budget("rooted", prod(len(r) for r in ranges), limit)
    if rooted.graph.has_zero_loop():
        return 0
    links = _links(rooted.graph)
    return sum(
        1 for x in product(*ranges) if all(x[h] - x[t] != g for t, h, g in links)
    )


def oracle_interval(
    graph: GainGraph,
    bounds: Sequence[int] | Mapping[int, int],
    m: int,
    *,
    limit: Optional[int] = None,
) -> int:
    """Interval coloring of a zero-gain graph: ``x_i`` in ``(h_i, m]``, adjacent colors differ."""
    if any(e.gain != 0 for e in graph.edges):
        raise InvalidInput("interval coloring needs a zero-gain graph")
    return oracle_rooted(RootedGainGraph.build(graph, bounds), m, limit=limit)


__all__ = ["oracle_integral", "oracle_interval", "oracle_modular", "oracle_rooted"]

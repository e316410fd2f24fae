"""Subcommand handlers: each takes parsed options and returns a JSON-ready dict."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.chromatic.characteristic import balanced_chromatic_polynomial, region_count
from src.chromatic.integral import integral_chromatic, integral_chromatic_dc, integral_terms
from src.chromatic.modular import modular_chromatic, modular_loop_rule
from src.errors import InvalidInput
from src.families.complete import FamilySpec, family_closed_form
from src.gains.graph import GainGraph, RootedGainGraph
from src.geometry.oracles import oracle_integral, oracle_modular, oracle_rooted

from .verify import verify_graph

logger = logging.getLogger(__name__)

Json = Dict[str, Any]
Graph = GainGraph | RootedGainGraph

INTEGRAL_METHODS = ("mobius", "dc", "oracle")
MODULAR_METHODS = ("flats", "paper", "oracle")


@dataclass(frozen=True, slots=True)
class Limits:
    flats: Optional[int] = None
    points: Optional[int] = None


def _require_m(m: Optional[int], command: str, minimum: Optional[int] = None) -> int:
    if m is None:
        raise InvalidInput(f"{command} needs --m")
    if minimum is not None and m < minimum:
        raise InvalidInput(f"{command} needs --m >= {minimum}, got {m}")
    return m


def _unrooted(graph: Graph, command: str) -> GainGraph:
    if isinstance(graph, RootedGainGraph):
        raise InvalidInput(f"{command} takes an unrooted graph; drop 'bounds' from the document")
    return graph


def eval_command(graph: Graph, m: Optional[int], method: str, limits: Limits) -> Json:
    m = _require_m(m, "eval")
    if method == "mobius":
        count = integral_chromatic(graph, m, limit=limits.flats)
    elif method == "dc":
        count = integral_chromatic_dc(graph, m)
    elif method == "oracle":
        if isinstance(graph, RootedGainGraph):
            count = oracle_rooted(graph, m, limit=limits.points)
        else:
            count = oracle_integral(graph, m, limit=limits.points)
    else:
        raise InvalidInput(f"unknown eval method {method!r}; expected one of {list(INTEGRAL_METHODS)}")
    return {"m": m, "count": str(count)}


def pieces_command(graph: Graph, limits: Limits) -> Json:
    return integral_terms(graph, limit=limits.flats).as_payload()


def charpoly_command(graph: Graph, limits: Limits) -> Json:
    polynomial = balanced_chromatic_polynomial(_unrooted(graph, "charpoly"), limit=limits.flats)
    return {"coefficients": [str(c) for c in polynomial.coefficients]}


def regions_command(graph: Graph, limits: Limits) -> Json:
    return {"regions": str(region_count(_unrooted(graph, "regions"), limit=limits.flats))}


def modular_command(graph: Graph, m: Optional[int], method: str, limits: Limits) -> Json:
    base = _unrooted(graph, "modular")
    m = _require_m(m, "modular", minimum=1)
    if method == "flats":
        return {"m": m, "count": str(modular_chromatic(base, m, limit=limits.flats))}
    if method == "oracle":
        return {"m": m, "count": str(oracle_modular(base, m, limit=limits.points))}
    if method == "paper":
        count = modular_chromatic(base, m, limit=limits.flats)
        rule = modular_loop_rule(base, m, limit=limits.flats)
        if rule != count:
            logger.info("modular.rule differs", extra={"m": m, "count": count, "rule": rule})
        return {"m": m, "count": str(count), "paper_rule": str(rule), "agrees": rule == count}
    raise InvalidInput(f"unknown modular method {method!r}; expected one of {list(MODULAR_METHODS)}")


def family_command(spec: FamilySpec, m: Optional[int], limits: Limits) -> Json:
    m = _require_m(m, "family")
    engine = integral_chromatic(spec.graph(), m, limit=limits.flats)
    closed = family_closed_form(spec, m)
    lo, hi = spec.interval
    return {
        "family": spec.name,
        "n": spec.n,
        "interval": [lo, hi],
        "m": m,
        "count": str(engine),
        "closed_form": None if closed is None else str(closed),
        "agrees": None if closed is None else closed == engine,
    }


def verify_command(graph: Graph, m_max: Optional[int], limits: Limits) -> Json:
    if m_max is None or m_max < 0:
        raise InvalidInput("verify needs --m-max >= 0")
    failures = verify_graph(graph, m_max, limit_flats=limits.flats, limit_points=limits.points)
    return {"ok": not failures, "failures": [f.as_dict() for f in failures]}


__all__ = [
    "INTEGRAL_METHODS",
    "Limits",
    "MODULAR_METHODS",
    "charpoly_command",
    "eval_command",
    "family_command",
    "modular_command",
    "pieces_command",
    "regions_command",
    "verify_command",
]

"""Modular chromatic function: colors and gains read in ``Z_m``."""

from __future__ import annotations

import logging
from typing import Optional, Sequence, Tuple

from src.errors import InvalidInput
from src.flats.semilattice import enumerate_flats
from src.gains.graph import Edge, GainGraph
from src.gains.switching import contract

logger = logging.getLogger(__name__)


def _check_modulus(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidInput(f"modulus must be a positive integer, got {m!r}")


def modular_chromatic(graph: GainGraph, m: int, *, limit: Optional[int] = None) -> int:
    """Proper colorations in ``Z_m``, counted over the flats of the mod-``m`` graph."""
    _check_modulus(m)
    lattice = enumerate_flats(graph, modulus=m, limit=limit)
    if lattice.graph.has_zero_loop():
        return 0
    return sum(mu * m ** len(flat.blocks) for flat, mu in lattice)


def modular_loop_rule(graph: GainGraph, m: int, *, limit: Optional[int] = None) -> int:
    """Loop substitution over the integral flats.

    A flat whose contraction carries a loop with gain divisible by ``m``
    contributes 0, any other flat ``B`` contributes ``mu(0, B) * m^|pi(B)|``.
    This matches :func:`modular_chromatic` only when ``m`` divides no nonzero
    loop gain (see :func:`loop_rule_applies`); below that, e.g. ``[0,1]K_2``
    at ``m = 1``, the two differ and both are reported.
    """
    _check_modulus(m)
    lattice = enumerate_flats(graph, limit=limit)
    total = 0
    for flat, mu in lattice:
        if any(gain % m == 0 for gain in flat.loop_gains):
            continue
        total += mu * m ** len(flat.blocks)
    return total


def loop_rule_applies(graph: GainGraph, m: int, *, limit: Optional[int] = None) -> bool:
    """True when ``m`` divides no nonzero contraction loop gain of any flat."""
    _check_modulus(m)
    lattice = enumerate_flats(graph, limit=limit)
    return not any(
        gain != 0 and gain % m == 0 for flat in lattice.flats for gain in flat.loop_gains
    )


def modular_dc_check(
    graph: GainGraph, edge: Edge | Sequence[int], m: int, *, limit: Optional[int] = None
) -> Tuple[int, int]:
    """``(chi(G), chi(G - e) - chi(G / e))`` for a link ``e``; the two must agree."""
    _check_modulus(m)
    (link,) = graph.resolve([edge])
    if link.is_loop:
        raise InvalidInput(f"deletion-contraction needs a link, got the loop {link}")
    whole = modular_chromatic(graph, m, limit=limit)
    deleted = modular_chromatic(graph.without(link), m, limit=limit)
    contracted = modular_chromatic(contract(graph, [link]), m, limit=limit)
    if whole != deleted - contracted:
        logger.warning(
            "modular.dc mismatch",
            extra={"edge": link.as_triple(), "m": m, "whole": whole, "split": deleted - contracted},
        )
    return whole, deleted - contracted


__all__ = [
    "loop_rule_applies",
    "modular_chromatic",
    "modular_dc_check",
    "modular_loop_rule",
]

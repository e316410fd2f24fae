"""Cross-method agreement checks over a range of ``m``."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from src.chromatic.integral import integral_chromatic_dc, integral_terms
from src.chromatic.modular import modular_chromatic
from src.gains.graph import GainGraph, RootedGainGraph, rooting
from src.geometry.oracles import oracle_modular, oracle_rooted

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Failure:
    """First ``m`` at which the methods of one check disagree."""

    check: str
    m: int
    values: Dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, object]:
        return {
            "check": self.check,
            "m": self.m,
            "values": {method: str(value) for method, value in sorted(self.values.items())},
        }


def _first_disagreement(
    check: str, ms: range, methods: Dict[str, Callable[[int], int]]
) -> Optional[Failure]:
    for m in ms:
        values = {name: method(m) for name, method in methods.items()}
        if len(set(values.values())) > 1:
            logger.warning("verify mismatch", extra={"check": check, "m": m})
            return Failure(check, m, values)
    return None


def verify_graph(
    graph: GainGraph | RootedGainGraph,
    m_max: int,
    *,
    limit_flats: Optional[int] = None,
    limit_points: Optional[int] = None,
) -> List[Failure]:
    """Integral methods on ``0..m_max``; modular methods on ``1..m_max`` for unrooted graphs."""
    rooted = graph if isinstance(graph, RootedGainGraph) else rooting(graph)
    terms = integral_terms(rooted, limit=limit_flats)
    failures = []
    integral = _first_disagreement(
        "integral",
        range(0, m_max + 1),
        {
            "mobius": terms.evaluate,
            "dc": lambda m: integral_chromatic_dc(rooted, m),
            "oracle": lambda m: oracle_rooted(rooted, m, limit=limit_points),
        },
    )
    if integral:
        failures.append(integral)
    if isinstance(graph, GainGraph):
        modular = _first_disagreement(
            "modular",
            range(1, m_max + 1),
            {
                "flats": lambda m: modular_chromatic(graph, m, limit=limit_flats),
                "oracle": lambda m: oracle_modular(graph, m, limit=limit_points),
            },
        )
        if modular:
            failures.append(modular)
    logger.info("verify done", extra={"m_max": m_max, "failures": len(failures)})
    return failures


__all__ = ["Failure", "verify_graph"]

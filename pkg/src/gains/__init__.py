"""Gain graphs and the structural operations the counting code consumes."""

from .graph import Edge, GainGraph, RootedGainGraph, delete_edge, rooting
from .switching import (
    Potential,
    SwitchingFunction,
    contract,
    improper_edges,
    is_balanced,
    switch,
    top_vertex_switching,
)

__all__ = [
    "Edge",
    "GainGraph",
    "Potential",
    "RootedGainGraph",
    "SwitchingFunction",
    "contract",
    "delete_edge",
    "improper_edges",
    "is_balanced",
    "rooting",
    "switch",
    "top_vertex_switching",
]

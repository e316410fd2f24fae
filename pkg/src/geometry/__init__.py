"""Arrangement view of gain graphs: translation, lattice-point oracles, cones."""

from .arrangement import Arrangement, arrangement_to_gain_graph, gain_graph_to_arrangement
from .cones import Cone, cone_decomposition, point_total_weight
from .oracles import oracle_integral, oracle_interval, oracle_modular, oracle_rooted

__all__ = [
    "Arrangement",
    "Cone",
    "arrangement_to_gain_graph",
    "cone_decomposition",
    "gain_graph_to_arrangement",
    "oracle_integral",
    "oracle_interval",
    "oracle_modular",
    "oracle_rooted",
    "point_total_weight",
]

"""Closed balanced edge sets, their Möbius function and the NBC cross-check."""

from .nbc import nbc_forest_count
from .semilattice import (
    BalancedFlat,
    FlatSemilattice,
    closure,
    enumerate_flats,
    mobius_sum_below,
    rooted_heights,
)

__all__ = [
    "BalancedFlat",
    "FlatSemilattice",
    "closure",
    "enumerate_flats",
    "mobius_sum_below",
    "nbc_forest_count",
    "rooted_heights",
]

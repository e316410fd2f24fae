"""Parametric families of interval complete graphs and their closed forms."""

from .complete import (
    FAMILY_NAMES,
    FamilySpec,
    ab_closed_form,
    family_closed_form,
    interval_complete_graph,
    odd_zero_check,
    one_bminus1_closed_form,
    one_bminus1_polynomial_value,
    shi_closed_form,
    zero_b_closed_form,
    zero_b_polynomial_value,
)
from .eulerian import binomial, binomial_polynomial, eulerian

__all__ = [
    "FAMILY_NAMES",
    "FamilySpec",
    "ab_closed_form",
    "binomial",
    "binomial_polynomial",
    "eulerian",
    "family_closed_form",
    "interval_complete_graph",
    "odd_zero_check",
    "one_bminus1_closed_form",
    "one_bminus1_polynomial_value",
    "shi_closed_form",
    "zero_b_closed_form",
    "zero_b_polynomial_value",
]

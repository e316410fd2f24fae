"""Integral, modular and characteristic counting over the flat semilattice."""

from .characteristic import (
    balanced_chromatic_polynomial,
    balanced_chromatic_polynomial_by_subsets,
    max_circle_gain,
    region_count,
)
from .integral import (
    integral_chromatic,
    integral_chromatic_dc,
    integral_terms,
    interval_chromatic,
)
from .modular import (
    loop_rule_applies,
    modular_chromatic,
    modular_dc_check,
    modular_loop_rule,
)
from .terms import Polynomial, Term, TermSum, eval_terms

__all__ = [
    "Polynomial",
    "Term",
    "TermSum",
    "balanced_chromatic_polynomial",
    "balanced_chromatic_polynomial_by_subsets",
    "eval_terms",
    "integral_chromatic",
    "integral_chromatic_dc",
    "integral_terms",
    "interval_chromatic",
    "loop_rule_applies",
    "max_circle_gain",
    "modular_chromatic",
    "modular_dc_check",
    "modular_loop_rule",
]

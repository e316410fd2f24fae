"""Interval complete graphs ``[a,b]K_n`` and their closed-form integral counts.

``[a,b]K_n`` has the edges ``g e_ij`` for ``i < j`` and ``a <= g <= b``:
Shi is ``[0,1]K_n``, extended Shi ``[-s+1,s]K_n`` and Linial ``[1,1]K_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from src.errors import InvalidInput
from src.gains.graph import GainGraph

from .eulerian import binomial, binomial_polynomial, eulerian

FAMILY_NAMES = ("interval-Kn", "shi", "ext-shi", "linial")


def interval_complete_graph(n: int, a: int, b: int) -> GainGraph:
    if n < 1:
        raise InvalidInput(f"order must be positive, got {n}")
    if a > b:
        raise InvalidInput(f"empty gain interval [{a},{b}]")
    return GainGraph.build(
        n,
        ((i, j, g) for i in range(1, n + 1) for j in range(i + 1, n + 1) for g in range(a, b + 1)),
    )


@dataclass(frozen=True, slots=True)
class FamilySpec:
    name: str
    n: int
    a: int = 0
    b: int = 1
    s: int = 1

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise InvalidInput(f"unknown family {self.name!r}; expected one of {list(FAMILY_NAMES)}")
        if self.n < 1:
            raise InvalidInput(f"order must be positive, got {self.n}")
        if self.name == "interval-Kn" and self.a > self.b:
            raise InvalidInput(f"empty gain interval [{self.a},{self.b}]")
        if self.name == "ext-shi" and self.s < 1:
            raise InvalidInput(f"extension parameter must be positive, got {self.s}")

    @property
    def interval(self) -> Tuple[int, int]:
        if self.name == "shi":
            return 0, 1
        if self.name == "ext-shi":
            return -self.s + 1, self.s
        if self.name == "linial":
            return 1, 1
        return self.a, self.b

    def graph(self) -> GainGraph:
        lo, hi = self.interval
        return interval_complete_graph(self.n, lo, hi)


def shi_closed_form(n: int, s: int, m: int) -> int:
    """Extended Shi ``[-s+1, s]K_n``: ``(m - s(n-1))^n`` from ``m = n + (s-1)(n-1)`` on."""
    if n < 1 or s < 1:
        raise InvalidInput(f"shi count needs n >= 1 and s >= 1, got n={n}, s={s}")
    if m < n + (s - 1) * (n - 1):
        return 0
    return (m - s * (n - 1)) ** n


def zero_b_closed_form(n: int, b: int, m: int) -> int:
    """``[0,b]K_n``: ``sum_r A(n, r+1) C(m - br, n)``; ``b = 0`` gives ``n! C(m, n)``."""
    if n < 1 or b < 0:
        raise InvalidInput(f"[0,b]K_n count needs n >= 1 and b >= 0, got n={n}, b={b}")
    if m < 0:
        return 0
    top = n - 1 if b == 0 else min(n - 1, m // b)
    return sum(eulerian(n, r + 1) * binomial(m - b * r, n) for r in range(top + 1))


def zero_b_polynomial_value(n: int, b: int, m: int) -> int:
    """The polynomial that :func:`zero_b_closed_form` follows once ``m >= b(n-1)``."""
    return sum(eulerian(n, r + 1) * binomial_polynomial(m - b * r, n) for r in range(n))


def ab_closed_form(n: int, lo: int, hi: int, m: int) -> int:
    """``[lo,hi]K_n`` with ``lo = -a <= 0`` and ``a <= hi``, reduced to ``[0, hi-a]K_n`` at ``m - (n-1)a``."""
    a, b = -lo, hi
    if a < 0 or a > b:
        raise InvalidInput(f"interval [{lo},{hi}] is not of the form [-a,b] with 0 <= a <= b")
    return zero_b_closed_form(n, b - a, m - (n - 1) * a)


def one_bminus1_closed_form(n: int, b: int, m: int) -> int:
    """``[1,b-1]K_n``: ``sum_r A(n, r+1) C(m + n - 1 - br, n)``; Linial is ``b = 2``."""
    if n < 1 or b < 1:
        raise InvalidInput(f"[1,b-1]K_n count needs n >= 1 and b >= 1, got n={n}, b={b}")
    shifted = m + n - 1
    if shifted < 0:
        return 0
    top = min(n - 1, shifted // b)
    return sum(eulerian(n, r + 1) * binomial(shifted - b * r, n) for r in range(top + 1))


def one_bminus1_polynomial_value(n: int, b: int, m: int) -> int:
    return sum(
        eulerian(n, r + 1) * binomial_polynomial(m + n - 1 - b * r, n) for r in range(n)
    )


def odd_zero_check(n: int, b: int) -> bool:
    """Whether the large-``m`` polynomial of ``[1,b-1]K_n`` vanishes at ``(b-1)(n-1)/2``."""
    if n % 2 == 0:
        raise InvalidInput(f"order must be odd, got {n}")
    if n < 3 or b < 2:
        raise InvalidInput(f"odd zero needs n >= 3 and b >= 2, got n={n}, b={b}")
    return one_bminus1_polynomial_value(n, b, (b - 1) * (n - 1) // 2) == 0


def family_closed_form(spec: FamilySpec, m: int) -> Optional[int]:
    """Closed-form count of a family member, or ``None`` when no formula covers its interval.

    Reversing the vertex order turns ``[lo,hi]K_n`` into ``[-hi,-lo]K_n``.
    """
    if spec.name in ("shi", "ext-shi"):
        return shi_closed_form(spec.n, spec.s if spec.name == "ext-shi" else 1, m)
    if spec.name == "linial":
        return one_bminus1_closed_form(spec.n, 2, m)
    lo, hi = spec.interval
    if -lo > hi:
        lo, hi = -hi, -lo
    if lo <= 0:
        return ab_closed_form(spec.n, lo, hi, m)
    if lo == 1:
        return one_bminus1_closed_form(spec.n, hi + 1, m)
    return None


__all__ = [
    "FAMILY_NAMES",
    "FamilySpec",
    "ab_closed_form",
    "family_closed_form",
    "interval_complete_graph",
    "odd_zero_check",
    "one_bminus1_closed_form",
    "one_bminus1_polynomial_value",
    "shi_closed_form",
    "zero_b_closed_form",
    "zero_b_polynomial_value",
]

"""Eulerian numbers and the binomials used by the closed-form counts."""

from __future__ import annotations

from functools import cache
from math import comb, factorial

from src.errors import InvalidInput


@cache
def _eulerian(n: int, k: int) -> int:
    if n == 1:
        return 1 if k == 1 else 0
    if k < 1 or k > n:
        return 0
    return k * _eulerian(n - 1, k) + (n - k + 1) * _eulerian(n - 1, k - 1)


def eulerian(n: int, k: int) -> int:
    """``A(n, k)``: permutations of ``n`` letters with ``k - 1`` ascents."""
    if n < 1 or not 1 <= k <= n:
        raise InvalidInput(f"eulerian number needs 1 <= k <= n, got n={n}, k={k}")
    return _eulerian(n, k)


def binomial(x: int, n: int) -> int:
    """``C(x, n)`` read as a count: 0 whenever ``x < n``, negative ``x`` included."""
    if x < n:
        return 0
    return comb(x, n)


def binomial_polynomial(x: int, n: int) -> int:
    """``x (x - 1) ... (x - n + 1) / n!`` for any integer ``x``."""
    falling = 1
    for i in range(n):
        falling *= x - i
    return falling // factorial(n)


__all__ = ["binomial", "binomial_polynomial", "eulerian"]

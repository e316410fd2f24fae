"""Piecewise-polynomial term sums and dense integer polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, Sequence, Tuple


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Integer polynomial in one variable; ``coefficients`` in ascending degree."""

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "Polynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "Polynomial":
        result = cls((1,))
        for root in roots:
            result = result * cls((-root, 1))
        return result

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, value: int) -> int:
        total = 0
        for coefficient in reversed(self.coefficients):
            total = total * value + coefficient
        return total

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return Polynomial.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            power = "" if degree == 0 else ("λ" if degree == 1 else f"λ^{degree}")
            magnitude = "" if abs(c) == 1 and degree else str(abs(c))
            parts.append(("-" if c < 0 else "+") + magnitude + power)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True, slots=True)
class Term:
    sign: int
    mu: int
    roots: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.roots)

    def evaluate(self, m: int) -> int:
        """``sign * mu * prod((m - r)^+)``; zero as soon as one factor is not positive."""
        if any(m <= r for r in self.roots):
            return 0
        return self.sign * self.mu * prod(m - r for r in self.roots)

    def polynomial(self) -> Polynomial:
        return Polynomial.from_roots(self.roots) * (self.sign * self.mu)


@dataclass(frozen=True, slots=True)
class TermSum:
    """``sum_j sign_j * mu_j * prod_i [m - r_ji]^+`` for a graph of order ``n``."""

    n: int
    terms: Tuple[Term, ...]

    @classmethod
    def from_signed(cls, n: int, signed: Iterable[Tuple[Sequence[int], int]]) -> "TermSum":
        """Merge ``(roots, signed multiplicity)`` pairs by root multiset."""
        merged: Dict[Tuple[int, ...], int] = {}
        for roots, value in signed:
            key = tuple(sorted(roots, reverse=True))
            merged[key] = merged.get(key, 0) + value
        terms = [
            Term(sign=1 if value > 0 else -1, mu=abs(value), roots=roots)
            for roots, value in merged.items()
            if value != 0
        ]
        terms.sort(key=lambda t: (-t.degree, t.roots))
        return cls(n, tuple(terms))

    def evaluate(self, m: int) -> int:
        return sum(term.evaluate(m) for term in self.terms)

    def polynomial(self) -> Polynomial:
        """The untruncated polynomial that ``evaluate`` follows above ``threshold``."""
        total = Polynomial.zero()
        for term in self.terms:
            total = total + term.polynomial()
        return total

    def threshold(self) -> int:
        """Largest root over all terms; every term is active for ``m`` above it."""
        return max((max(t.roots) for t in self.terms if t.roots), default=0)

    def as_payload(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "terms": [
                {"sign": t.sign, "mu": t.mu, "roots": list(t.roots)} for t in self.terms
            ],
        }


def eval_terms(terms: TermSum, m: int) -> int:
    return terms.evaluate(m)


__all__ = ["Polynomial", "Term", "TermSum", "eval_terms"]

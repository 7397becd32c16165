"""Exact rational helpers: Bernoulli numbers, binomials, power-sum polynomials.

Every value produced here is a :class:`fractions.Fraction` (arbitrary
precision, normalized to lowest terms with positive denominator). Nothing in
this module touches floating point; the series oracles downstream depend on
that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal

__all__ = [
    "Rational",
    "Sign",
    "Bound",
    "bernoulli",
    "binomial",
    "FaulhaberPolynomial",
    "faulhaber_coefficients",
    "format_rational",
    "parse_rational",
]

# Exact rationals throughout the package. Fraction already guarantees the
# invariants we need (lowest terms, positive denominator), so it *is* the
# rational type rather than a wrapper around one.
Rational = Fraction

Sign = Literal["plus", "minus"]
Bound = Literal["inclusive", "exclusive"]


@lru_cache(maxsize=None)
def _bernoulli_lower(n: int) -> Fraction:
    # "minus" convention (B_1 = -1/2), from sum_{j=0}^{m} C(m+1, j) B_j = [m == 0].
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += comb(n + 1, j) * _bernoulli_lower(j)
    return -acc / (n + 1)


def bernoulli(n: int, sign: Sign) -> Fraction:
    """Bernoulli number B_n in the requested sign convention.

    ``sign="plus"`` is the family generated by t/(1-e^{-t}), ``sign="minus"``
    the one generated by t/(e^t-1). They agree for every n except n = 1,
    where the plus family gives +1/2 and the minus family -1/2.

    Values are memoized; concurrent callers may at worst recompute a value,
    never observe a different one.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    value = _bernoulli_lower(n)
    if n == 1 and sign == "plus":
        return -value
    return value


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), extended so formulas with empty ranges
    collapse silently: 0 for k > n and for every k < 0 (the k = -1 case is
    the Kronecker-delta convention delta_{n,-1}, which vanishes on the
    domain n >= 0).
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class FaulhaberPolynomial:
    """A power sum written as an exact polynomial in its upper limit m.

    ``pairs`` holds (power, coefficient) entries with positive powers in
    descending order and zero coefficients pruned; ``constant`` is the
    degree-0 correction (only nonzero for the exclusive sum of k = 0).
    """

    pairs: tuple[tuple[int, Fraction], ...]
    constant: Fraction

    def evaluate(self, m: int) -> Fraction:
        acc = self.constant
        for power, coeff in self.pairs:
            acc += coeff * Fraction(m) ** power
        return acc


def faulhaber_coefficients(k: int, bound: Bound) -> FaulhaberPolynomial:
    """Closed form of sum_{n=1}^{m} n^k (``bound="inclusive"``) or
    sum_{n=1}^{m-1} n^k (``bound="exclusive"``) as a polynomial in m.

    The inclusive form uses the plus Bernoulli family, the exclusive form
    the minus family together with a -1 constant correction when k = 0.
    The polynomial has degree k + 1 and no constant term apart from that
    correction.
    """
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if bound not in ("inclusive", "exclusive"):
        raise ValueError(f"bound must be 'inclusive' or 'exclusive', got {bound!r}")
    sign: Sign = "plus" if bound == "inclusive" else "minus"
    inv = Fraction(1, k + 1)
    pairs = []
    for i in range(k + 1):
        coeff = inv * comb(k + 1, i) * bernoulli(i, sign)
        if coeff:
            pairs.append((k + 1 - i, coeff))
    constant = Fraction(-1) if (bound == "exclusive" and k == 0) else Fraction(0)
    return FaulhaberPolynomial(tuple(pairs), constant)


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; accepts ``"p"`` and ``"p/q"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc

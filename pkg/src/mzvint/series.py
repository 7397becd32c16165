"""Exact truncated series and harmonic sums, used as independent oracles.

For an index (k_1, ..., k_r) the attached power series has coefficients

    c_n = sum over 0 < n_1 < ... < n_r = n of prod n_i^{-k_i}

and the truncated harmonic sum relaxes n_r = n to n_r <= N. Both are
computed by exact prefix-sum dynamic programming over Fractions in
O(depth * N) operations, so they provide brute-force ground truth for the
reduction map and both products without sharing any code with them.
Floating point enters only in :func:`zeta_real_approx`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .indices import Index, IndexClass, IndexSum, AdmissibilityError, classify, m_index
from .reduction import pi_plus
from .shuffle import shuffle
from .stuffle import stuffle

__all__ = [
    "SeriesPoly",
    "mpl_coefficients",
    "harmonic_sum",
    "Report",
    "combination_series",
    "verify_reduction",
    "verify_shuffle",
    "verify_stuffle",
    "zeta_real_approx",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _power(n: int, exponent: int) -> Fraction:
    """n^exponent as an exact rational, any integer exponent."""
    if exponent >= 0:
        return Fraction(n**exponent)
    return Fraction(1, n ** (-exponent))


@dataclass(frozen=True)
class SeriesPoly:
    """A power series truncated at a fixed order, with exact coefficients
    ``coeffs[n]`` for z^n, n = 0..order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other: "SeriesPoly") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "SeriesPoly") -> "SeriesPoly":
        self._check(other)
        return SeriesPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesPoly") -> "SeriesPoly":
        self._check(other)
        return SeriesPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "SeriesPoly") -> "SeriesPoly":
        """Product truncated at the common order."""
        self._check(other)
        n = self.order
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return SeriesPoly(tuple(out))

    def scaled(self, factor: Fraction | int) -> "SeriesPoly":
        c = Fraction(factor)
        return SeriesPoly(tuple(c * a for a in self.coeffs))


@lru_cache(maxsize=None)
def _mpl_cached(k: Index, order: int) -> SeriesPoly:
    # cur[n] after processing t entries = coefficient of the depth-t prefix
    # series at z^n; the depth-0 series is the constant 1.
    cur = [_ZERO] * (order + 1)
    cur[0] = _ONE
    for entry in k:
        nxt = [_ZERO] * (order + 1)
        prefix = _ZERO
        for n in range(1, order + 1):
            prefix += cur[n - 1]
            if prefix:
                nxt[n] = prefix * _power(n, -entry)
        cur = nxt
    return SeriesPoly(tuple(cur))


def mpl_coefficients(k: Index, order: int) -> SeriesPoly:
    """Exact coefficients c_0..c_order of the series attached to ``k``."""
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    return _mpl_cached(tuple(k), order)


@lru_cache(maxsize=None)
def _harmonic_cached(k: Index, bound: int) -> Fraction:
    # cur[n] after processing t entries = truncated sum of the depth-t prefix
    # with all summation variables <= n; the empty product contributes 1.
    cur = [_ONE] * (bound + 1)
    for entry in k:
        nxt = [_ZERO] * (bound + 1)
        running = _ZERO
        for n in range(1, bound + 1):
            running += _power(n, -entry) * cur[n - 1]
            nxt[n] = running
        cur = nxt
    return cur[bound]


def harmonic_sum(k: Index, bound: int) -> Fraction:
    """Exact nested sum over 0 < n_1 < ... < n_r <= bound of prod n_i^{-k_i}."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    return _harmonic_cached(tuple(k), bound)


@dataclass(frozen=True)
class Report:
    """Outcome of an exact coefficientwise comparison."""

    passed: bool
    first_mismatch: int | None
    order: int

    def to_json_dict(self) -> dict:
        return {"pass": self.passed, "first_mismatch": self.first_mismatch, "order": self.order}


def _compare(lhs: SeriesPoly, rhs: SeriesPoly) -> Report:
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Report(False, n, lhs.order)
    return Report(True, None, lhs.order)


def combination_series(combo: IndexSum, order: int) -> SeriesPoly:
    """Series attached to a linear combination of indices, truncated at
    the given order."""
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    out = [_ZERO] * (order + 1)
    for index, coeff in combo:
        for n, c in enumerate(_mpl_cached(index, order).coeffs):
            if c:
                out[n] += coeff * c
    return SeriesPoly(tuple(out))


def verify_reduction(k: Index, order: int) -> Report:
    """Check that the positive reduction of ``k`` reproduces its series
    coefficients exactly up to the given order."""
    k = tuple(k)
    lhs = mpl_coefficients(k, order)
    rhs = combination_series(pi_plus(k), order)
    return _compare(lhs, rhs)


def verify_shuffle(k: Index, k2: Index, order: int) -> Report:
    """Check the series-product identity for the shuffle expansion of a pair."""
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    k, k2 = tuple(k), tuple(k2)
    lhs = mpl_coefficients(k, order) * mpl_coefficients(k2, order)
    rhs = combination_series(shuffle(k, k2), order)
    return _compare(lhs, rhs)


def verify_stuffle(k: Index, k2: Index, bound: int) -> Report:
    """Check the truncated-harmonic-product identity for the stuffle
    expansion of a pair; this is an exact rational identity for every bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    k, k2 = tuple(k), tuple(k2)
    lhs = harmonic_sum(k, bound) * harmonic_sum(k2, bound)
    rhs = _ZERO
    for index, coeff in stuffle(k, k2):
        rhs += coeff * _harmonic_cached(index, bound)
    if lhs == rhs:
        return Report(True, None, bound)
    return Report(False, bound, bound)


@lru_cache(maxsize=None)
def _zeta_real_cached(k: Index, terms: int) -> tuple[float, float]:
    if not k:
        return 1.0, 0.0
    cur = [1.0] * (terms + 1)
    for entry in k:
        nxt = [0.0] * (terms + 1)
        running = 0.0
        for n in range(1, terms + 1):
            running += float(n) ** (-entry) * cur[n - 1]
            nxt[n] = running
        cur = nxt
    m = m_index(k)
    # Crude tail heuristic: the outermost variable decays like n^{-(m+1)} up
    # to logarithmic factors from the inner sums. Reported, not guaranteed.
    hint = (1.0 + math.log(terms)) ** (len(k) - 1) / (m * float(terms) ** m)
    return cur[terms], hint


def zeta_real_approx(k: Index, terms: int) -> tuple[float, float]:
    """Floating-point partial sum of the defining series with all summation
    variables <= ``terms``, for an admissible index, together with a crude
    tail-size hint. No convergence acceleration is applied."""
    k = tuple(k)
    if classify(k) is not IndexClass.ADMISSIBLE:
        raise AdmissibilityError(f"real evaluation requires an admissible index, got {k}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    return _zeta_real_cached(k, terms)

"""Integer indices and their formal rational linear combinations.

An index is a plain tuple of integers; the empty tuple is the depth-0 index.
The central classifier is the regularizability index: the minimum over all
suffixes of (weight - depth). Indices with a positive (resp. non-negative)
regularizability index are admissible (resp. regularizable).
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .rationals import format_rational, parse_rational

__all__ = [
    "Index",
    "EMPTY_INDEX",
    "INFINITY",
    "IndexClass",
    "AdmissibilityError",
    "weight",
    "depth",
    "tail_index",
    "m_index",
    "classify",
    "is_admissible",
    "is_regularizable",
    "concat",
    "format_index",
    "IndexSum",
    "m_of_sum",
    "as_index_sum",
]

Index = tuple[int, ...]
EMPTY_INDEX: Index = ()

# Sentinel for the regularizability index of the empty index: totally ordered
# above all integers and absorbing under addition, so the min-formulas stay
# total when the empty index participates.
INFINITY = math.inf


class IndexClass(Enum):
    ADMISSIBLE = "admissible"
    REGULARIZABLE_ONLY = "regularizable_only"
    NON_REGULARIZABLE = "non_regularizable"


class AdmissibilityError(ValueError):
    """Raised when an operation defined only for admissible indices is
    applied to a non-admissible one."""


def weight(k: Index) -> int:
    """Sum of the entries; 0 for the empty index."""
    return sum(k)


def depth(k: Index) -> int:
    """Number of entries."""
    return len(k)


def tail_index(k: Index, t: int) -> Index:
    """The suffix (k_t, ..., k_r) for 1 <= t <= depth(k)."""
    if not 1 <= t <= len(k):
        raise ValueError(f"tail position {t} out of range 1..{len(k)}")
    return k[t - 1 :]


def m_index(k: Index) -> int | float:
    """Regularizability index: min over suffixes of (weight - depth).

    Returns :data:`INFINITY` for the empty index.
    """
    if not k:
        return INFINITY
    best: int | float = INFINITY
    acc = 0
    for entry in reversed(k):
        acc += entry - 1
        if acc < best:
            best = acc
    return best


def classify(k: Index) -> IndexClass:
    """Admissible iff m > 0, regularizable-only iff m = 0, otherwise
    non-regularizable. The empty index is admissible."""
    m = m_index(k)
    if m > 0:
        return IndexClass.ADMISSIBLE
    if m == 0:
        return IndexClass.REGULARIZABLE_ONLY
    return IndexClass.NON_REGULARIZABLE


def is_admissible(k: Index) -> bool:
    return m_index(k) > 0


def is_regularizable(k: Index) -> bool:
    return m_index(k) >= 0


def concat(k: Index, k2: Index) -> Index:
    """Entry lists joined in order; the empty index is neutral."""
    return tuple(k) + tuple(k2)


def format_index(k: Index) -> str:
    """Text form ``(k1,k2,...)``; ``()`` for the empty index."""
    return "(" + ",".join(str(e) for e in k) + ")"


def _canonical_key(k: Index) -> tuple[int, Index]:
    return (len(k), k)


TermsLike = Union[Mapping[Index, Fraction], Iterable[tuple[Index, Fraction]]]


class IndexSum:
    """A finite formal Q-linear combination of indices.

    Zero coefficients are pruned eagerly, so the stored key set is exactly
    the support. Instances are immutable values: all arithmetic returns new
    sums, and they are safe to share between threads.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()) -> None:
        data: dict[Index, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for index, coeff in items:
            index = tuple(index)
            coeff = Fraction(coeff)
            if not coeff:
                continue
            acc = data.get(index)
            if acc is None:
                data[index] = coeff
            else:
                acc = acc + coeff
                if acc:
                    data[index] = acc
                else:
                    del data[index]
        self._terms = data

    @classmethod
    def zero(cls) -> "IndexSum":
        return cls()

    @classmethod
    def single(cls, index: Index, coeff: Fraction | int = 1) -> "IndexSum":
        return cls(((tuple(index), Fraction(coeff)),))

    @classmethod
    def _from_clean(cls, data: dict[Index, Fraction]) -> "IndexSum":
        # Fast path for internal callers: data must already be pruned of zeros.
        out = cls()
        out._terms = data
        return out

    def terms(self) -> list[tuple[Index, Fraction]]:
        """Terms in canonical order: by depth, then lexicographically."""
        return sorted(self._terms.items(), key=lambda item: _canonical_key(item[0]))

    def support(self) -> frozenset[Index]:
        return frozenset(self._terms)

    def coefficient(self, index: Index) -> Fraction:
        return self._terms.get(tuple(index), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Index, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "IndexSum") -> "IndexSum":
        if not isinstance(other, IndexSum):
            return NotImplemented
        out = dict(self._terms)
        for index, coeff in other._terms.items():
            acc = out.get(index)
            if acc is None:
                out[index] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[index] = acc
                else:
                    del out[index]
        result = IndexSum.zero()
        result._terms = out
        return result

    def __neg__(self) -> "IndexSum":
        result = IndexSum.zero()
        result._terms = {index: -coeff for index, coeff in self._terms.items()}
        return result

    def __sub__(self, other: "IndexSum") -> "IndexSum":
        if not isinstance(other, IndexSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> "IndexSum":
        if isinstance(scalar, IndexSum):
            return NotImplemented
        c = Fraction(scalar)
        if not c:
            return IndexSum.zero()
        result = IndexSum.zero()
        result._terms = {index: coeff * c for index, coeff in self._terms.items()}
        return result

    __rmul__ = __mul__

    def pretty(self) -> str:
        """Human-readable rendering, e.g. ``1·(2) - 1·(3)``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (index, coeff) in enumerate(self.terms()):
            mag = format_rational(abs(coeff))
            term = f"{mag}·{format_index(index)}"
            if i == 0:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IndexSum<{self.pretty()}>"

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"coeff": format_rational(coeff), "index": list(index)}
                for index, coeff in self.terms()
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "IndexSum":
        terms = []
        for item in data["terms"]:
            terms.append((tuple(int(e) for e in item["index"]), parse_rational(item["coeff"])))
        return cls(terms)


def m_of_sum(s: IndexSum) -> int | float:
    """Minimum of the regularizability index over the support; infinity for
    the zero sum (empty minimum, matching the empty index convention)."""
    best: int | float = INFINITY
    for index in s.support():
        m = m_index(index)
        if m < best:
            best = m
    return best


IndexSumLike = Union[IndexSum, Index]


def as_index_sum(value: IndexSumLike) -> IndexSum:
    """Coerce a bare index (tuple/list of ints) to a one-term sum."""
    if isinstance(value, IndexSum):
        return value
    return IndexSum.single(tuple(value))

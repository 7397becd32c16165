"""Formal zeta symbols for admissible integer indices and the relations the
two products force between them.

An admissible integer index stands for the rational combination of positive
admissible symbols produced by the positive reduction. Multiplying two
symbols through the shuffle product and through the stuffle product must
give the same value, so the difference of the two reduced expansions is a
certified linear relation among positive admissible zeta values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .indices import (
    AdmissibilityError,
    Index,
    IndexSum,
    is_admissible,
)
from .reduction import pi_plus
from .series import zeta_real_approx
from .shuffle import shuffle
from .stuffle import stuffle

__all__ = [
    "Relation",
    "NumericReport",
    "zeta_expand",
    "dsr_relation",
    "verify_relation_numeric",
    "relation_json_dict",
    "relation_json_line",
]


def _require_admissible(k: Index) -> Index:
    k = tuple(k)
    if not is_admissible(k):
        raise AdmissibilityError(
            f"index {k} is not admissible; zeta symbols are only defined for admissible indices"
        )
    return k


def zeta_expand(k: Index) -> IndexSum:
    """Expand the symbol of an admissible integer index into positive
    admissible symbols (the positive reduction, with the domain guard)."""
    return pi_plus(_require_admissible(k))


@dataclass(frozen=True)
class Relation:
    """A double-product relation instance for one pair of admissible indices.

    ``difference`` is shuffle minus stuffle expansion; read as
    sum(coeff * zeta(index)) = 0 over its terms. Both full expansions are
    kept alongside for auditing and deduplication downstream.
    """

    pair: tuple[Index, Index]
    shuffle_expansion: IndexSum
    stuffle_expansion: IndexSum
    difference: IndexSum


def _check_positive_admissible(s: IndexSum, what: str) -> None:
    # the empty index is vacuously positive and admissible
    for index, _ in s:
        if (index and min(index) <= 0) or not is_admissible(index):
            raise RuntimeError(
                f"{what} contains the non positive-admissible index {index}; "
                "this contradicts the closure guarantees and indicates a bug"
            )


def dsr_relation(k: Index, k2: Index) -> Relation:
    """Build the certified relation for a pair of admissible indices."""
    k = _require_admissible(k)
    k2 = _require_admissible(k2)
    shuffle_expansion = pi_plus(shuffle(k, k2))
    stuffle_expansion = pi_plus(stuffle(k, k2))
    _check_positive_admissible(shuffle_expansion, "shuffle expansion")
    _check_positive_admissible(stuffle_expansion, "stuffle expansion")
    return Relation(
        pair=(k, k2),
        shuffle_expansion=shuffle_expansion,
        stuffle_expansion=stuffle_expansion,
        difference=shuffle_expansion - stuffle_expansion,
    )


@dataclass(frozen=True)
class NumericReport:
    """Floating-point evaluation of a relation's difference."""

    passed: bool
    value: float
    order: int
    tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "value": self.value,
            "order": self.order,
            "tolerance": self.tolerance,
        }


def verify_relation_numeric(rel: Relation, terms: int, tolerance: float) -> NumericReport:
    """Evaluate the difference with real partial sums; pass iff the absolute
    value stays below the tolerance."""
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    total = 0.0
    for index, coeff in rel.difference:
        value, _ = zeta_real_approx(index, terms)
        total += float(coeff) * value
    return NumericReport(abs(total) < tolerance, total, terms, tolerance)


def relation_json_dict(rel: Relation) -> dict:
    return {
        "pair": [list(rel.pair[0]), list(rel.pair[1])],
        "shuffle": rel.shuffle_expansion.to_json_dict(),
        "stuffle": rel.stuffle_expansion.to_json_dict(),
        "difference": rel.difference.to_json_dict(),
    }


def relation_json_line(rel: Relation) -> str:
    """One-line JSON form, stable across runs for identical inputs."""
    return json.dumps(relation_json_dict(rel), separators=(",", ":"))

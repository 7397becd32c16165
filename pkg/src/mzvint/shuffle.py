"""Shuffle product on integer indices via recursive word rewriting.

The recursion works on words ending in y (plus the empty word) and applies,
in fixed priority order:

* unit:    1 # w = w # 1 = w
* y-rule:  a leading y on either factor is pulled out front,
           yu # v = u # yv = y(u # v)
* d-rule:  a maximal leading run d^n is eliminated through the closed
           Leibniz expansion
           d^n u # v = sum_{t=0}^{n} (-1)^t C(n,t) d^{n-t}(u # d^t v)
           (and its mirror image when the run is on the right factor)
* j-rule:  ju # jv = j(u # jv) + j(ju # v)

Fully reduced terms that do not end in y span an ideal and are discarded as
they appear; the surviving terms all end in y and map back to indices.
Arguments are put in a canonical order first, which makes the procedure
symmetric and lets the memo table use an unordered pair as its key.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .indices import Index, IndexSum, IndexSumLike, as_index_sum
from .words import Blocks, Word, WordSum, is_wy, length

__all__ = ["ShuffleRecursionError", "shuffle_words", "shuffle", "clear_cache"]


class ShuffleRecursionError(RuntimeError):
    """Internal error: the rewriting recursion exceeded its depth budget."""


_EMPTY: Blocks = (0,)

# Expansion results keyed by the (sorted) argument pair; values are tuples of
# (blocks, integer coefficient). Entries are only ever written complete, so a
# racing reader sees either nothing or the final value.
_MEMO: dict[tuple[Blocks, Blocks], tuple[tuple[Blocks, int], ...]] = {}


def clear_cache() -> None:
    _MEMO.clear()


def _expand(bu: Blocks, bv: Blocks, depth: int) -> tuple[tuple[Blocks, int], ...]:
    if depth <= 0:
        raise ShuffleRecursionError("shuffle recursion exceeded its depth budget")
    if bu == _EMPTY:
        return ((bv, 1),)
    if bv == _EMPTY:
        return ((bu, 1),)
    if bv < bu:
        bu, bv = bv, bu
    key = (bu, bv)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached

    out: dict[Blocks, int] = {}

    def add(blocks: Blocks, coeff: int) -> None:
        acc = out.get(blocks)
        if acc is None:
            out[blocks] = coeff
        else:
            acc += coeff
            if acc:
                out[blocks] = acc
            else:
                del out[blocks]

    hu, hv = bu[0], bv[0]
    if hu == 0:  # left factor starts with y (it is not empty here)
        for blocks, coeff in _expand(bu[1:], bv, depth - 1):
            add((0,) + blocks, coeff)
    elif hv == 0:  # right factor starts with y
        for blocks, coeff in _expand(bu, bv[1:], depth - 1):
            add((0,) + blocks, coeff)
    elif hu < 0:  # left factor starts with a d-run of length n
        n = -hu
        rest = (0,) + bu[1:]
        for t in range(n + 1):
            coeff = comb(n, t) if t % 2 == 0 else -comb(n, t)
            shifted = (bv[0] - t,) + bv[1:]
            for blocks, inner in _expand(rest, shifted, depth - 1):
                add((blocks[0] - (n - t),) + blocks[1:], coeff * inner)
    elif hv < 0:  # d-run on the right factor: mirrored expansion
        n = -hv
        rest = (0,) + bv[1:]
        for t in range(n + 1):
            coeff = comb(n, t) if t % 2 == 0 else -comb(n, t)
            shifted = (bu[0] - t,) + bu[1:]
            for blocks, inner in _expand(shifted, rest, depth - 1):
                add((blocks[0] - (n - t),) + blocks[1:], coeff * inner)
    else:  # both factors start with j
        for blocks, coeff in _expand((hu - 1,) + bu[1:], bv, depth - 1):
            add((blocks[0] + 1,) + blocks[1:], coeff)
        for blocks, coeff in _expand(bu, (hv - 1,) + bv[1:], depth - 1):
            add((blocks[0] + 1,) + blocks[1:], coeff)

    # Quotient step: drop reduced terms that do not end in y.
    result = tuple((blocks, coeff) for blocks, coeff in out.items() if blocks[-1] == 0)
    _MEMO[key] = result
    return result


def _budget(bu: Blocks, bv: Blocks, max_depth: int | None) -> int:
    if max_depth is not None:
        return max_depth
    return 10 * (length(Word(bu)) + length(Word(bv))) + 10


def shuffle_words(u: Word, v: Word, *, max_depth: int | None = None) -> WordSum:
    """Shuffle two words; both must be empty or end in y.

    ``max_depth`` bounds the recursion (default 10x the combined letter
    count); exceeding it raises :class:`ShuffleRecursionError`.
    """
    for w in (u, v):
        if not is_wy(w):
            raise ValueError(f"shuffle operands must be empty or end in y, got {w!r}")
    terms = _expand(u.blocks, v.blocks, _budget(u.blocks, v.blocks, max_depth))
    return WordSum(((Word(blocks), Fraction(coeff)) for blocks, coeff in terms))


def _shuffle_indices(k: Index, k2: Index, max_depth: int | None) -> tuple[tuple[Blocks, int], ...]:
    bu = tuple(reversed(k)) + (0,)
    bv = tuple(reversed(k2)) + (0,)
    return _expand(bu, bv, _budget(bu, bv, max_depth))


def shuffle(a: IndexSumLike, b: IndexSumLike, *, max_depth: int | None = None) -> IndexSum:
    """Bilinear extension of the word shuffle to index combinations."""
    left = as_index_sum(a)
    right = as_index_sum(b)
    acc: dict[Index, Fraction] = {}
    for k, ca in left:
        for k2, cb in right:
            scale = ca * cb
            for blocks, coeff in _shuffle_indices(k, k2, max_depth):
                index = tuple(reversed(blocks[:-1]))
                prev = acc.get(index)
                if prev is None:
                    acc[index] = scale * coeff
                else:
                    prev = prev + scale * coeff
                    if prev:
                        acc[index] = prev
                    else:
                        del acc[index]
    return IndexSum._from_clean(acc)

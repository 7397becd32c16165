"""Exact double-shuffle algebra for multiple zeta values of integer indices.

The package classifies integer indices by their regularizability index,
reduces them to positive-index combinations through an exact power-sum
expansion, implements the extended shuffle and stuffle products, and emits
certified linear relations among positive admissible zeta values. Every
symbolic computation is exact rational arithmetic; independent truncated
series and harmonic-sum oracles verify the identities coefficientwise.
"""

from .indices import (
    EMPTY_INDEX,
    INFINITY,
    AdmissibilityError,
    Index,
    IndexClass,
    IndexSum,
    as_index_sum,
    classify,
    concat,
    depth,
    format_index,
    is_admissible,
    is_regularizable,
    m_index,
    m_of_sum,
    tail_index,
    weight,
)
from .rationals import (
    FaulhaberPolynomial,
    Rational,
    bernoulli,
    binomial,
    faulhaber_coefficients,
    format_rational,
    parse_rational,
)
from .reduction import pi_plus, reduce_step
from .relations import (
    NumericReport,
    Relation,
    dsr_relation,
    relation_json_dict,
    relation_json_line,
    verify_relation_numeric,
    zeta_expand,
)
from .series import (
    Report,
    SeriesPoly,
    combination_series,
    harmonic_sum,
    mpl_coefficients,
    verify_reduction,
    verify_shuffle,
    verify_stuffle,
    zeta_real_approx,
)
from .shuffle import ShuffleRecursionError, shuffle, shuffle_words
from .stuffle import stuffle
from .words import (
    EMPTY_WORD,
    Word,
    WordSum,
    index_from_word,
    is_wy,
    normalize,
    prepend,
    prepend_letter,
    word_from_index,
    word_from_text,
    word_to_text,
)
from .words import length as word_length

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "EMPTY_INDEX",
    "EMPTY_WORD",
    "FaulhaberPolynomial",
    "INFINITY",
    "Index",
    "IndexClass",
    "IndexSum",
    "NumericReport",
    "Rational",
    "Relation",
    "Report",
    "SeriesPoly",
    "ShuffleRecursionError",
    "Word",
    "WordSum",
    "as_index_sum",
    "bernoulli",
    "binomial",
    "classify",
    "combination_series",
    "concat",
    "depth",
    "dsr_relation",
    "faulhaber_coefficients",
    "format_index",
    "format_rational",
    "harmonic_sum",
    "index_from_word",
    "is_admissible",
    "is_regularizable",
    "is_wy",
    "m_index",
    "m_of_sum",
    "mpl_coefficients",
    "normalize",
    "parse_rational",
    "pi_plus",
    "prepend",
    "prepend_letter",
    "reduce_step",
    "relation_json_dict",
    "relation_json_line",
    "shuffle",
    "shuffle_words",
    "stuffle",
    "tail_index",
    "verify_reduction",
    "verify_relation_numeric",
    "verify_shuffle",
    "verify_stuffle",
    "weight",
    "word_from_index",
    "word_from_text",
    "word_length",
    "word_to_text",
    "zeta_expand",
    "zeta_real_approx",
]

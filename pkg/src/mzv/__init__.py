"""Shuffle-algebra combinatorics and high-precision numerics of multiple zeta values."""

from .words import (
    A,
    B,
    AdmissibilityError,
    Composition,
    Word,
    WordPolynomial,
    admissible_compositions,
    shuffle_poly,
    shuffle_words,
)
from .identities import (
    aa_word_set,
    aa_word_sum,
    ab_power_shuffle,
    dressed_factorial_identity,
    dressed_shuffle_identity,
    euler_decomposition,
    orbit_count,
    signed_binomial_sum,
    zagier_factorial_identity,
    zagier_shuffle_identity,
)
from .evaluate import (
    InsertionVector,
    PrecisionContext,
    RealValue,
    cyclic_sum_residual,
    dressed_residual,
    insertion_swap_residual,
    insertion_vectors,
    li_half,
    zagier_residual,
    zeta,
    zeta_insertion,
    zeta_two_power,
    zeta_word,
)
from .relations import (
    PrecisionError,
    RelationScan,
    RelationSearch,
    ZetaFamily,
    build_family,
    canonical_relation,
    default_scan_context,
    deflate_relations,
    evaluate_family,
    find_relation,
    relation_count,
    relation_scan,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "B",
    "AdmissibilityError",
    "Composition",
    "InsertionVector",
    "PrecisionContext",
    "PrecisionError",
    "RealValue",
    "RelationScan",
    "RelationSearch",
    "Word",
    "WordPolynomial",
    "ZetaFamily",
    "aa_word_set",
    "aa_word_sum",
    "ab_power_shuffle",
    "admissible_compositions",
    "build_family",
    "canonical_relation",
    "cyclic_sum_residual",
    "default_scan_context",
    "deflate_relations",
    "dressed_factorial_identity",
    "dressed_residual",
    "dressed_shuffle_identity",
    "euler_decomposition",
    "evaluate_family",
    "find_relation",
    "insertion_swap_residual",
    "insertion_vectors",
    "li_half",
    "orbit_count",
    "relation_count",
    "relation_scan",
    "shuffle_poly",
    "shuffle_words",
    "signed_binomial_sum",
    "zagier_factorial_identity",
    "zagier_residual",
    "zagier_shuffle_identity",
    "zeta",
    "zeta_insertion",
    "zeta_two_power",
    "zeta_word",
]

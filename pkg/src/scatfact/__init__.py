"""Scattered factors of words: analysis, counting, enumeration, extremes.

Public surface: word/alphabet primitives, arch factorization and
universality, the subsequence automaton with exact counting and
bounded-delay enumeration, Simon k-congruence, the two extremal word
families, and brute-force verification sweeps.
"""

from .arch import (
    NONE_POS,
    ArchFactorization,
    arch_factorize,
    is_min_perfect_universal,
    is_perfect_universal,
    next_alph_pos,
    next_alph_pos_table,
    render_factorization,
    universality_index,
)
from .extremal import (
    ExtremalParams,
    count_shortest_min_absent_words,
    default_alphabet,
    enumerate_shortest_min_absent_words,
    max_scatfact_count,
    min_absent_count,
    min_absent_word,
    min_scatfact_word,
    shortest_min_absent_length,
    truncate_to_min_length,
    wmin_next_alph_pos_formula,
)
from .factors import (
    CanonicalEmbedding,
    CountTable,
    SubsequenceAutomaton,
    absent_count,
    build_automaton,
    canonical_embedding,
    count_scatfact_all_lengths,
    enumerate_scatfact,
    enumerate_scatfact_with_delays,
    is_scattered_factor,
    scatfact_set,
    simon_congruent,
    transfer_embedding,
)
from .oracle import (
    VerificationReport,
    brute_scatfact_set,
    enumerate_words,
    sweep_max_scatfact_count,
    verify_always_absent,
    verify_injection,
    verify_max_absent_extremality,
    verify_min_absent_extremality,
)
from .words import (
    Alphabet,
    AlphabetMismatchError,
    GuardExceeded,
    Word,
    canonical_word,
    letters_of,
    parse_word,
    reverse,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatchError",
    "ArchFactorization",
    "CanonicalEmbedding",
    "CountTable",
    "ExtremalParams",
    "GuardExceeded",
    "NONE_POS",
    "SubsequenceAutomaton",
    "VerificationReport",
    "Word",
    "absent_count",
    "arch_factorize",
    "brute_scatfact_set",
    "build_automaton",
    "canonical_embedding",
    "canonical_word",
    "count_scatfact_all_lengths",
    "count_shortest_min_absent_words",
    "default_alphabet",
    "enumerate_scatfact",
    "enumerate_scatfact_with_delays",
    "enumerate_shortest_min_absent_words",
    "enumerate_words",
    "is_min_perfect_universal",
    "is_perfect_universal",
    "is_scattered_factor",
    "letters_of",
    "max_scatfact_count",
    "min_absent_count",
    "min_absent_word",
    "min_scatfact_word",
    "next_alph_pos",
    "next_alph_pos_table",
    "parse_word",
    "render_factorization",
    "reverse",
    "scatfact_set",
    "shortest_min_absent_length",
    "simon_congruent",
    "sweep_max_scatfact_count",
    "transfer_embedding",
    "truncate_to_min_length",
    "universality_index",
    "verify_always_absent",
    "verify_injection",
    "verify_max_absent_extremality",
    "verify_min_absent_extremality",
    "wmin_next_alph_pos_formula",
]

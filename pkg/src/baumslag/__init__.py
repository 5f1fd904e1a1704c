"""Exact computation in iterated Baumslag-Solitar groups and the
Baumslag-Gersten group: word problem, power recognition, conjugacy with
checkable certificates, and compressed-integer length bounds."""

from .bs12 import BSElem, Dyadic, conj_bs12, conjugator_word, eval_word
from .gersten import (
    GerstenContext,
    britton_reduce_bg,
    conj_bg,
    cyclic_britton_reduce,
    embed_in_G2M,
    from_original,
    length_bounds_bg,
    power_witness_bg,
    scan_t_pinches,
    shift_to_subgroup,
    to_original,
    word_problem_bg,
)
from .oracle import (
    BudgetExceeded,
    SearchBudget,
    bounded_conjugator_search,
    brute_min_signed_terms,
    confirm_trivial_by_insertion,
    conjugate_orbit,
    min_word_length,
    random_trivial_word,
    signed_term_table,
)
from .powersum import (
    PowerSum,
    TooLargeError,
    from_int,
    length_lower_bound,
    min_term_count,
    naf,
    parse_power_sum,
    third_of_tower_minus_one,
    to_int,
    to_signed_units,
)
from .tower import (
    ConjCertificate,
    ConjOutcome,
    RankResult,
    TowerContext,
    britton_reduce,
    conj_gm,
    eval_power,
    is_identity,
    length_bounds_power,
    lift,
    rank,
    retract,
    synth_power,
)
from .witnesses import WitnessReport, cl_table, make_witness_bg, make_witness_gm
from .words import EMPTY, Letter, SylWord, Word, parse_word, print_word

__version__ = "0.1.0"

__all__ = [
    "BSElem",
    "BudgetExceeded",
    "ConjCertificate",
    "ConjOutcome",
    "Dyadic",
    "EMPTY",
    "GerstenContext",
    "Letter",
    "PowerSum",
    "RankResult",
    "SearchBudget",
    "SylWord",
    "TooLargeError",
    "TowerContext",
    "WitnessReport",
    "Word",
    "bounded_conjugator_search",
    "britton_reduce",
    "britton_reduce_bg",
    "brute_min_signed_terms",
    "cl_table",
    "confirm_trivial_by_insertion",
    "conj_bg",
    "conj_bs12",
    "conj_gm",
    "conjugate_orbit",
    "conjugator_word",
    "cyclic_britton_reduce",
    "embed_in_G2M",
    "eval_power",
    "eval_word",
    "from_int",
    "from_original",
    "is_identity",
    "length_bounds_bg",
    "length_bounds_power",
    "length_lower_bound",
    "lift",
    "make_witness_bg",
    "make_witness_gm",
    "min_term_count",
    "min_word_length",
    "naf",
    "parse_power_sum",
    "parse_word",
    "power_witness_bg",
    "print_word",
    "random_trivial_word",
    "rank",
    "retract",
    "scan_t_pinches",
    "shift_to_subgroup",
    "signed_term_table",
    "synth_power",
    "third_of_tower_minus_one",
    "to_int",
    "to_original",
    "to_signed_units",
    "word_problem_bg",
]

"""Universality of prefix, suffix, factor, and subword closures of regular
languages, plus synchronizing words, Boolean matrix mortality, and finite
word-set variants."""

from .automata import (
    DEFAULT_BUDGET,
    EPSILON,
    Alphabet,
    Decision,
    Dfa,
    Machine,
    Nfa,
    SearchBudget,
    Word,
    accepts,
    nfa_of_dfa,
    remove_epsilon,
    reverse,
    single_start,
    trim,
)
from .closures import ClosureKind, closure_nfa, pref_complement_dfa
from .deciders import (
    closure_universal,
    fact_universal_dfa,
    nfa_universal,
    pref_universal_dfa,
    subw_universal,
)
from .errors import InputError, ResourceError, ToolkitError
from .finitesets import (
    OmegaSide,
    WordSet,
    fact_star_universal,
    omega_universal,
    pref_star_universal,
    star_nfa,
    suff_star_universal,
)
from .oracle import EnumBound, closure_member_bruteforce, universal_up_to
from .reductions import (
    GadgetSpec,
    MatrixSet,
    factor_gadget,
    is_mortal,
    matrices_of_nfa,
    product_matrix,
    suffix_gadget,
    union_universal,
)
from .sync import is_synchronizing, shortest_reset_word
from .witnesses import FamilyKind, gen_family, shortest_missing

__all__ = [
    "Alphabet",
    "ClosureKind",
    "DEFAULT_BUDGET",
    "Decision",
    "Dfa",
    "EPSILON",
    "EnumBound",
    "FamilyKind",
    "GadgetSpec",
    "InputError",
    "Machine",
    "MatrixSet",
    "Nfa",
    "OmegaSide",
    "ResourceError",
    "SearchBudget",
    "ToolkitError",
    "Word",
    "WordSet",
    "accepts",
    "closure_member_bruteforce",
    "closure_nfa",
    "closure_universal",
    "fact_star_universal",
    "fact_universal_dfa",
    "factor_gadget",
    "gen_family",
    "is_mortal",
    "is_synchronizing",
    "matrices_of_nfa",
    "nfa_of_dfa",
    "nfa_universal",
    "omega_universal",
    "pref_complement_dfa",
    "pref_star_universal",
    "pref_universal_dfa",
    "product_matrix",
    "remove_epsilon",
    "reverse",
    "shortest_missing",
    "shortest_reset_word",
    "single_start",
    "star_nfa",
    "subw_universal",
    "suff_star_universal",
    "suffix_gadget",
    "trim",
    "union_universal",
    "universal_up_to",
]

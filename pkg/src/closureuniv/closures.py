"""NFA constructions for the prefix, suffix, factor, and subword closures.

Each construction reuses the input's states: pref changes the final set,
suff changes the initial set (generalized NFA form), fact trims and marks
everything initial+final, subw adds an eps-edge parallel to every ordinary
edge and then eliminates eps.  None of them grows the state count.
"""

from __future__ import annotations

import enum

from .automata import (
    Dfa,
    Nfa,
    coreachable_states,
    reachable_states,
    remove_epsilon,
    trim,
)


class ClosureKind(enum.Enum):
    PREF = "pref"
    SUFF = "suff"
    FACT = "fact"
    SUBW = "subw"


def closure_nfa(m: Nfa, kind: ClosureKind) -> Nfa:
    """NFA for Pref/Suff/Fact/Subw of L(m).

    Fact(empty language) is taken to be empty: the empty word is a factor
    only of words that exist.
    """
    m = remove_epsilon(m)
    if kind is ClosureKind.PREF:
        return Nfa(
            m.alphabet,
            m.state_count,
            m.initials,
            coreachable_states(m),
            m.moves,
            m.eps,
        )
    if kind is ClosureKind.SUFF:
        return Nfa(
            m.alphabet,
            m.state_count,
            reachable_states(m),
            m.finals,
            m.moves,
            m.eps,
        )
    if kind is ClosureKind.FACT:
        t = trim(m)
        everything = frozenset(range(t.state_count))
        return Nfa(t.alphabet, t.state_count, everything, everything, t.moves, t.eps)
    if kind is ClosureKind.SUBW:
        k = len(m.alphabet)
        eps = tuple(
            frozenset().union(*m.moves[p]) if k else frozenset()
            for p in range(m.state_count)
        )
        return remove_epsilon(
            Nfa(m.alphabet, m.state_count, m.initials, m.finals, m.moves, eps)
        )
    raise AssertionError(f"unknown closure kind: {kind}")


def pref_complement_dfa(m: Dfa) -> Dfa:
    """DFA for the complement of Pref(L(m)), on the same state set.

    Flips finality: the new final states are those from which no original
    final state is reachable, found by search on the reversed graph.
    """
    from .automata import nfa_of_dfa

    can_finish = coreachable_states(nfa_of_dfa(m))
    finals = frozenset(q for q in range(m.state_count) if q not in can_finish)
    return Dfa(m.alphabet, m.state_count, m.start, finals, m.delta)

"""Shortest-counterexample computation and generators for extremal families."""

from __future__ import annotations

import enum
import itertools
from typing import Sequence, Union

from .automata import (
    DEFAULT_BUDGET,
    Alphabet,
    Dfa,
    Machine,
    Nfa,
    SearchBudget,
    Word,
    nfa_of_dfa,
)
from .closures import ClosureKind, closure_nfa
from .deciders import nfa_universal
from .errors import InputError
from .finitesets import WordSet
from .reductions import GadgetSpec, suffix_gadget


class FamilyKind(enum.Enum):
    PREF_LINE = "pref-line"
    SUFFIX_PRIMES = "suffix-primes"
    SUBWORD_CHAIN = "subword-chain"
    FACTOR_WORDSET = "factor-wordset"
    CERNY = "cerny"


def shortest_missing(
    m: Machine, kind: ClosureKind, budget: SearchBudget = DEFAULT_BUDGET
) -> Word | None:
    """Canonical shortest word outside the chosen closure, None if universal."""
    nfa = nfa_of_dfa(m) if isinstance(m, Dfa) else m
    verdict = nfa_universal(closure_nfa(nfa, kind), budget)
    return verdict.witness if not verdict.universal else None


def _line_dfa(n: int) -> Dfa:
    # Unary chain accepting exactly a^(n-2); the last state is a trap.
    alphabet = Alphabet(("a",))
    delta = tuple(
        (min(i + 1, n - 1),) for i in range(n)
    )
    return Dfa(alphabet, n, 0, frozenset((n - 2,)), delta)


def _prime_cycle_dfa(p: int) -> Dfa:
    # Unary cycle accepting b^k exactly when k is not congruent to p-1
    # modulo p.  The union over distinct primes then misses only the words
    # b^k with k = -1 modulo every prime, the shortest being b^(P-1) for
    # P the product of the primes, which is what makes the suffix gadget's
    # shortest missing word long.
    alphabet = Alphabet(("b",))
    delta = tuple(((i + 1) % p,) for i in range(p))
    return Dfa(alphabet, p, 0, frozenset(range(p - 1)), delta)


def _subword_chain_nfa(n: int) -> Nfa:
    # n+1 states over n symbols; q_i loops on everything except its own
    # symbol, which advances the chain; only the last state accepts.
    alphabet = Alphabet(tuple(f"a{i}" for i in range(n)))
    edges = []
    for i in range(n):
        for j in range(n):
            if j != i:
                edges.append((i, f"a{j}", i))
        edges.append((i, f"a{i}", i + 1))
    return Nfa.from_edges(alphabet, n + 1, initials=(0,), finals=(n,), edges=edges)


def _factor_wordset(n: int) -> WordSet:
    alphabet = Alphabet(("0", "1"))
    excluded = tuple("0" * (n - 1) + "1")
    words = [
        w
        for w in itertools.product("01", repeat=n)
        if w != excluded
    ]
    return WordSet.of(alphabet, words)


def _cerny_dfa(n: int) -> Dfa:
    # Cyclic letter plus one letter merging the last state into the first.
    alphabet = Alphabet(("a", "b"))
    delta = tuple(
        ((i + 1) % n, 0 if i == n - 1 else i) for i in range(n)
    )
    return Dfa(alphabet, n, 0, frozenset((0,)), delta)


def gen_family(
    kind: FamilyKind,
    n: int | None = None,
    primes: Sequence[int] | None = None,
) -> Union[Dfa, Nfa, WordSet]:
    """Build one member of a named extremal family.

    pref-line, subword-chain, factor-wordset, and cerny take the size n;
    suffix-primes takes a list of distinct primes.
    """
    if kind is FamilyKind.SUFFIX_PRIMES:
        if not primes:
            raise InputError("suffix-primes needs a list of primes")
        if len(set(primes)) != len(primes) or any(p < 2 for p in primes):
            raise InputError("primes must be distinct and at least 2")
        machines = tuple(_prime_cycle_dfa(p) for p in primes)
        return suffix_gadget(GadgetSpec(machines))
    if n is None:
        raise InputError(f"family {kind.value} needs n")
    if kind is FamilyKind.PREF_LINE:
        if n < 2:
            raise InputError("pref-line needs n >= 2")
        return _line_dfa(n)
    if kind is FamilyKind.SUBWORD_CHAIN:
        if n < 1:
            raise InputError("subword-chain needs n >= 1")
        return _subword_chain_nfa(n)
    if kind is FamilyKind.FACTOR_WORDSET:
        if n < 1:
            raise InputError("factor-wordset needs n >= 1")
        return _factor_wordset(n)
    if kind is FamilyKind.CERNY:
        if n < 1:
            raise InputError("cerny needs n >= 1")
        return _cerny_dfa(n)
    raise AssertionError(f"unknown family: {kind}")

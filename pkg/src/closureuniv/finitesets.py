"""Finite sets of finite words: star automata, trie-based universality.

Pref(S*) universality is decided in linear time on a pruned trie: keep only
the words with no shorter member of S as a prefix; the closure is universal
iff every trie node has out-degree 0 or |alphabet|.  The suffix variant
reverses every word; the factor variant has no known polynomial algorithm
and falls back to the automaton route.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .automata import (
    DEFAULT_BUDGET,
    Alphabet,
    Decision,
    Nfa,
    SearchBudget,
    Word,
)
from .closures import ClosureKind, closure_nfa
from .deciders import nfa_universal
from .errors import InputError


@dataclass(frozen=True)
class WordSet:
    alphabet: Alphabet
    words: frozenset[Word]

    def __post_init__(self) -> None:
        for w in self.words:
            for sym in w:
                self.alphabet.index(sym)

    @classmethod
    def of(cls, alphabet: Alphabet, words: Iterable[Word]) -> "WordSet":
        return cls(alphabet, frozenset(tuple(w) for w in words))

    def sorted_words(self) -> list[Word]:
        idx = self.alphabet.index
        return sorted(self.words, key=lambda w: (len(w), [idx(s) for s in w]))


class OmegaSide(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    BI = "bi"


class _TrieNode:
    __slots__ = ("children", "terminal")

    def __init__(self) -> None:
        self.children: dict[str, "_TrieNode"] = {}
        self.terminal = False


class Trie:
    """Prefix tree with the pruning insertion rule: a word is dropped when
    an inserted word is its prefix, and evicts any inserted words it is a
    prefix of.  The result holds the minimal (prefix-free) kernel of S."""

    def __init__(self) -> None:
        self.root = _TrieNode()

    def insert(self, word: Word) -> None:
        if not word:
            raise InputError("empty word cannot enter the trie")
        node = self.root
        for sym in word:
            if node.terminal:
                return  # a shorter inserted word is a prefix of this one
            node = node.children.setdefault(sym, _TrieNode())
        node.terminal = True
        node.children.clear()  # evict longer words this one is a prefix of


def _word_key(alphabet: Alphabet, w: Word) -> list[int]:
    return [alphabet.index(s) for s in w]


def _shortest_missing_prefixes(s: WordSet) -> list[Word] | None:
    """All shortest words outside Pref(S*), or None when it is universal.

    Level-order trie walk: the first level holding any deficient node
    determines the witness length, and every (deficient node, missing
    symbol) pair on it yields one shortest missing word.
    """
    alphabet = s.alphabet
    k = len(alphabet)
    words = [w for w in s.sorted_words() if w]
    if not words:
        return [(sym,) for sym in alphabet.symbols]
    trie = Trie()
    for w in words:
        trie.insert(w)
    level: list[tuple[_TrieNode, Word]] = [(trie.root, ())]
    while level:
        found: list[Word] = []
        nxt: list[tuple[_TrieNode, Word]] = []
        for node, path in level:
            if node.terminal:
                continue  # leaf: a complete word of the kernel
            if len(node.children) < k:
                found.extend(
                    path + (sym,)
                    for sym in alphabet.symbols
                    if sym not in node.children
                )
            nxt.extend(
                (node.children[sym], path + (sym,))
                for sym in alphabet.symbols
                if sym in node.children
            )
        if found:
            return found
        level = nxt
    return None


def pref_star_universal(s: WordSet) -> Decision:
    """Is every word a prefix of a concatenation of words of S?

    The witness, when not universal, is the canonical shortest word
    outside Pref(S*): the trie walk lists candidate nodes in symbol order,
    so the first one is lexicographically least.
    """
    missing = _shortest_missing_prefixes(s)
    if missing is None:
        return Decision(True)
    return Decision(False, missing[0])


def suff_star_universal(s: WordSet) -> Decision:
    """Suffix variant: decided on the reversed word set.

    All shortest missing prefixes of the mirrored set are collected, and
    the one whose reversal is lexicographically least (in the original
    reading order) becomes the witness.
    """
    mirrored = WordSet.of(s.alphabet, (tuple(reversed(w)) for w in s.words))
    missing = _shortest_missing_prefixes(mirrored)
    if missing is None:
        return Decision(True)
    idx = s.alphabet.index
    best = min(
        (tuple(reversed(w)) for w in missing),
        key=lambda w: [idx(sym) for sym in w],
    )
    return Decision(False, best)


def star_nfa(s: WordSet) -> Nfa:
    """Linear-size NFA for S*: a hub plus one branch per nonempty word."""
    alphabet = s.alphabet
    edges: list[tuple[int, str, int]] = []
    next_id = 1
    for w in s.sorted_words():
        if not w:
            continue
        prev = 0
        for sym in w[:-1]:
            edges.append((prev, sym, next_id))
            prev = next_id
            next_id += 1
        edges.append((prev, w[-1], 0))
    return Nfa.from_edges(alphabet, next_id, initials=(0,), finals=(0,), edges=edges)


def fact_star_universal(
    s: WordSet, budget: SearchBudget = DEFAULT_BUDGET
) -> Decision:
    """Is every word a factor of a concatenation of words of S?

    No polynomial algorithm is known; this is exact via the star NFA, its
    factor closure, and the budget-guarded universality search.
    """
    return nfa_universal(closure_nfa(star_nfa(s), ClosureKind.FACT), budget)


def omega_universal(
    s: WordSet, side: OmegaSide, budget: SearchBudget = DEFAULT_BUDGET
) -> Decision:
    """Can every right-/left-/bi-infinite word be built from words of S?

    Each side is equivalent to universality of the matching closure of S*,
    which is what gets decided; infinite words are never materialized.
    """
    if side is OmegaSide.RIGHT:
        return pref_star_universal(s)
    if side is OmegaSide.LEFT:
        return suff_star_universal(s)
    return fact_star_universal(s, budget)

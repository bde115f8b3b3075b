"""Synchronizing words for complete DFAs.

Existence is decided in polynomial time through the pair graph: the DFA is
synchronizing iff every unordered state pair can reach a merged (singleton)
configuration.  The exact shortest reset word is found by BFS over the
power set of states, so it is only meant for desk-scale machines.
"""

from __future__ import annotations

from collections import deque

from .automata import DEFAULT_BUDGET, Dfa, SearchBudget, Word
from .errors import ResourceError


def is_synchronizing(m: Dfa) -> bool:
    n = m.state_count
    if n <= 1:
        return True
    k = len(m.alphabet)
    # Reverse edges of the pair graph; pairs that merge in one step seed
    # the backward search.
    rev: dict[tuple[int, int], list[tuple[int, int]]] = {}
    mergeable: set[tuple[int, int]] = set()
    queue: deque[tuple[int, int]] = deque()
    for p in range(n):
        for q in range(p + 1, n):
            for a in range(k):
                p2, q2 = m.delta[p][a], m.delta[q][a]
                if p2 == q2:
                    if (p, q) not in mergeable:
                        mergeable.add((p, q))
                        queue.append((p, q))
                else:
                    key = (p2, q2) if p2 < q2 else (q2, p2)
                    rev.setdefault(key, []).append((p, q))
    while queue:
        pair = queue.popleft()
        for pred in rev.get(pair, ()):
            if pred not in mergeable:
                mergeable.add(pred)
                queue.append(pred)
    return len(mergeable) == n * (n - 1) // 2


def shortest_reset_word(
    m: Dfa, budget: SearchBudget = DEFAULT_BUDGET
) -> Word | None:
    """Shortest w with a singleton image of the full state set, or None.

    Canonical tie-break: symbols are tried in alphabet order, so the BFS
    returns the lexicographically least among the shortest reset words.
    """
    n = m.state_count
    k = len(m.alphabet)
    full = (1 << n) - 1
    if n <= 1:
        return ()
    succ = [[m.delta[p][a] for p in range(n)] for a in range(k)]

    def image(mask: int, a: int) -> int:
        out = 0
        tab = succ[a]
        p = 0
        while mask:
            if mask & 1:
                out |= 1 << tab[p]
            mask >>= 1
            p += 1
        return out

    parents: dict[int, tuple[int, int] | None] = {full: None}
    queue = deque([full])
    while queue:
        cur = queue.popleft()
        for a in range(k):
            nxt = image(cur, a)
            if nxt in parents:
                continue
            parents[nxt] = (cur, a)
            if len(parents) > budget.max_subsets:
                raise ResourceError("reset-word search exceeded max_subsets")
            if nxt & (nxt - 1) == 0:  # singleton
                word: list[str] = []
                node: int | None = nxt
                while parents[node] is not None:
                    prev, sym = parents[node]  # type: ignore[misc]
                    word.append(m.alphabet.symbols[sym])
                    node = prev
                return tuple(reversed(word))
            queue.append(nxt)
    return None

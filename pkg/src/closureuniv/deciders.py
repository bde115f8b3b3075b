"""Universality deciders for the four closures.

Fast paths: prefix universality on DFAs (linear), factor universality on
DFAs (polynomial, via dead-state merging and synchronizing words), subword
universality on anything (linear, via strongly connected components).
Everything else goes through the generic subset-BFS universality search,
which also supplies canonical shortest witnesses.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from . import sync
from .automata import (
    DEFAULT_BUDGET,
    Decision,
    Dfa,
    EPSILON,
    Machine,
    Nfa,
    SearchBudget,
    Word,
    coreachable_states,
    nfa_of_dfa,
    remove_epsilon,
    trim,
)
from .closures import ClosureKind, closure_nfa
from .errors import ResourceError

__all__ = [
    "SearchBudget",
    "DEFAULT_BUDGET",
    "pref_universal_dfa",
    "nfa_universal",
    "closure_universal",
    "fact_universal_dfa",
    "subw_universal",
]


def pref_universal_dfa(m: Dfa) -> Decision:
    """Pref(L(m)) = alphabet* iff every reachable state can still accept."""
    can_finish = coreachable_states(nfa_of_dfa(m))
    if m.start not in can_finish:
        return Decision(False, EPSILON)
    syms = m.alphabet.symbols
    parents: dict[int, tuple[int, int] | None] = {m.start: None}
    queue = deque([m.start])
    while queue:
        p = queue.popleft()
        for a in range(len(syms)):
            q = m.delta[p][a]
            if q in parents:
                continue
            parents[q] = (p, a)
            if q not in can_finish:
                return Decision(False, _backtrack(parents, q, syms))
            queue.append(q)
    return Decision(True)


def _backtrack(
    parents: dict, node, syms: tuple[str, ...]
) -> Word:
    word: list[str] = []
    while parents[node] is not None:
        prev, a = parents[node]
        word.append(syms[a])
        node = prev
    return tuple(reversed(word))


def nfa_universal(m: Nfa, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """Subset-construction BFS for L(m) = alphabet*.

    Subsets are explored breadth-first with symbols in alphabet order, so
    the first rejecting subset found yields the canonical shortest missing
    word.  Raises ResourceError when the budget runs out before a verdict.
    """
    m = remove_epsilon(m)
    syms = m.alphabet.symbols
    k = len(syms)
    finals = m.finals
    start = frozenset(m.initials)
    if not (start & finals):
        return Decision(False, EPSILON)
    parents: dict[frozenset[int], tuple[frozenset[int], int] | None] = {
        start: None
    }
    queue = deque([(start, 0)])
    while queue:
        cur, depth = queue.popleft()
        if budget.max_word_len is not None and depth >= budget.max_word_len:
            raise ResourceError("universality search hit max_word_len")
        for a in range(k):
            nxt: set[int] = set()
            for p in cur:
                nxt |= m.moves[p][a]
            fnxt = frozenset(nxt)
            if fnxt in parents:
                continue
            parents[fnxt] = (cur, a)
            if len(parents) > budget.max_subsets:
                raise ResourceError("universality search exceeded max_subsets")
            if not (fnxt & finals):
                return Decision(False, _backtrack(parents, fnxt, syms))
            queue.append((fnxt, depth + 1))
    return Decision(True)


def _quotient_dead(m: Dfa, dead: frozenset[int]) -> Dfa:
    """Merge all dead states into a single self-looping dead state."""
    live = [q for q in range(m.state_count) if q not in dead]
    remap = {old: new for new, old in enumerate(live)}
    d = len(live)  # id of the merged dead state
    k = len(m.alphabet)
    rows = [
        tuple(
            remap.get(m.delta[old][a], d) for a in range(k)
        )
        for old in live
    ]
    rows.append(tuple(d for _ in range(k)))
    return Dfa(
        m.alphabet,
        d + 1,
        remap.get(m.start, d),
        frozenset(remap[q] for q in m.finals if q not in dead),
        tuple(rows),
    )


def _restrict_dfa(m: Dfa, keep: Iterable[int]) -> Dfa:
    kept = sorted(set(keep))
    remap = {old: new for new, old in enumerate(kept)}
    rows = tuple(
        tuple(remap[t] for t in m.delta[old]) for old in kept
    )
    return Dfa(
        m.alphabet,
        len(kept),
        remap[m.start],
        frozenset(remap[q] for q in m.finals if q in remap),
        rows,
    )


def fact_universal_dfa(m: Dfa) -> Decision:
    """Polynomial factor-universality test for complete DFAs.

    Steps: drop unreachable states; merge dead states into one; answer yes
    if a universal state exists; otherwise answer yes iff the merged
    machine has no synchronizing word.  Verdict only: callers wanting the
    witness go through the generic closure search.
    """
    as_nfa = nfa_of_dfa(m)
    reach = sorted(
        set(range(m.state_count))
        & set(_reach_of(as_nfa))
    )
    m = _restrict_dfa(m, reach)
    can_finish = coreachable_states(nfa_of_dfa(m))
    dead = frozenset(q for q in range(m.state_count) if q not in can_finish)
    if dead:
        m = _quotient_dead(m, dead)
        dead = frozenset((m.state_count - 1,))
    # Universal states: those from which the dead state is unreachable.
    if not dead:
        return Decision(True)
    can_die = _states_reaching(m, dead)
    if any(q not in can_die for q in range(m.state_count)):
        return Decision(True)
    return Decision(not sync.is_synchronizing(m))


def _reach_of(m: Nfa) -> frozenset[int]:
    from .automata import reachable_states

    return reachable_states(m)


def _states_reaching(m: Dfa, targets: frozenset[int]) -> set[int]:
    rev: list[list[int]] = [[] for _ in range(m.state_count)]
    for p, row in enumerate(m.delta):
        for t in row:
            rev[t].append(p)
    seen = set(targets)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in rev[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def _sccs(adj: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative to survive deep transition graphs."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return result


def subw_universal(
    m: Nfa, budget: SearchBudget = DEFAULT_BUDGET
) -> Decision:
    """Linear subword-universality verdict via strongly connected components.

    Universal iff, after trimming, some SCC has internal edges covering the
    whole alphabet.  The witness for the negative case is computed through
    the generic closure search so that it is the canonical shortest one.
    """
    t = trim(remove_epsilon(m))
    k = len(m.alphabet)
    if t.state_count == 0:
        return Decision(False, EPSILON)
    adj = [
        sorted(set().union(*t.moves[p])) for p in range(t.state_count)
    ]
    comp_of = [0] * t.state_count
    comps = _sccs(adj)
    for ci, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = ci
    covered: list[set[int]] = [set() for _ in comps]
    for p in range(t.state_count):
        for a in range(k):
            for q in t.moves[p][a]:
                if comp_of[p] == comp_of[q]:
                    covered[comp_of[p]].add(a)
    if any(len(c) == k for c in covered):
        return Decision(True)
    missing = nfa_universal(closure_nfa(m, ClosureKind.SUBW), budget)
    return Decision(False, missing.witness)


def closure_universal(
    m: Machine, kind: ClosureKind, budget: SearchBudget = DEFAULT_BUDGET
) -> Decision:
    """Dispatch to the fastest decider available for (machine kind, closure)."""
    if isinstance(m, Dfa):
        if kind is ClosureKind.PREF:
            return pref_universal_dfa(m)
        if kind is ClosureKind.FACT:
            return fact_universal_dfa(m)
        nfa = nfa_of_dfa(m)
    else:
        nfa = m
    if kind is ClosureKind.SUBW:
        return subw_universal(nfa, budget)
    return nfa_universal(closure_nfa(nfa, kind), budget)

"""Definition-level ground truth, independent of the closure constructions.

Membership of w in a closure of L(m) is decided straight from the
definitions: search for a continuation z (prefix case), a context x
(suffix case), both (factor case), or an embedding of w into an accepted
superword (subword case).  Context searches are capped by `pad`; with
pad >= 2 * state_count they are exact, because a shortest usable context
never needs to repeat a state.  The subword search is exact regardless of
pad.  Nothing here touches the closures or deciders modules.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .automata import (
    Alphabet,
    Decision,
    Dfa,
    Machine,
    Nfa,
    Word,
    accepts,
    remove_epsilon,
)
from .closures import ClosureKind
from .errors import InputError, ResourceError

_INF = float("inf")


@dataclass(frozen=True)
class EnumBound:
    max_len: int
    max_words: int | None = None

    def __post_init__(self) -> None:
        if self.max_len < 0:
            raise InputError("max_len must be nonnegative")


def iter_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len, shortest first, then by symbol order."""
    yield ()
    for length in range(1, max_len + 1):
        yield from product(alphabet.symbols, repeat=length)


def enum_language(m: Machine, b: EnumBound) -> list[Word]:
    """All accepted words of length <= max_len, in canonical order."""
    out: list[Word] = []
    for w in iter_words(m.alphabet, b.max_len):
        if accepts(m, w):
            out.append(w)
            if b.max_words is not None and len(out) > b.max_words:
                raise ResourceError("enumeration exceeded max_words")
    return out


class _Tables:
    """Bitmask views of a machine plus shortest context-length tables."""

    def __init__(self, m: Machine) -> None:
        if isinstance(m, Nfa):
            m = remove_epsilon(m)
            n = m.state_count
            self.initial = _mask(m.initials)
            self.final = _mask(m.finals)
            self.succ = [
                [_mask(m.moves[p][a]) for p in range(n)]
                for a in range(len(m.alphabet))
            ]
        else:
            n = m.state_count
            self.initial = 1 << m.start
            self.final = _mask(m.finals)
            self.succ = [
                [1 << m.delta[p][a] for p in range(n)]
                for a in range(len(m.alphabet))
            ]
        self.alphabet = m.alphabet
        self.n = n
        self.k = len(m.alphabet)
        edges = [0] * n  # any-symbol successor mask
        for p in range(n):
            for a in range(self.k):
                edges[p] |= self.succ[a][p]
        self.dist_from_start = self._distances(self.initial, edges, forward=True)
        self.dist_to_final = self._distances(self.final, edges, forward=False)
        # Forward reachability closure per state (including the state itself).
        self.closure = [self._close(1 << p, edges) for p in range(n)]

    def _distances(self, seed: int, edges: list[int], forward: bool) -> list:
        n = self.n
        if forward:
            adj = [
                [q for q in range(n) if edges[p] >> q & 1] for p in range(n)
            ]
        else:
            adj = [
                [q for q in range(n) if edges[q] >> p & 1] for p in range(n)
            ]
        dist = [_INF] * n
        queue: deque[int] = deque()
        for p in range(n):
            if seed >> p & 1:
                dist[p] = 0
                queue.append(p)
        while queue:
            p = queue.popleft()
            for q in adj[p]:
                if dist[q] is _INF:
                    dist[q] = dist[p] + 1
                    queue.append(q)
        return dist

    def _close(self, mask: int, edges: list[int]) -> int:
        prev = 0
        while mask != prev:
            prev = mask
            acc = mask
            p = 0
            rest = mask
            while rest:
                if rest & 1:
                    acc |= edges[p]
                rest >>= 1
                p += 1
            mask = acc
        return mask

    def step_mask(self, mask: int, a: int) -> int:
        out = 0
        succ_a = self.succ[a]
        p = 0
        while mask:
            if mask & 1:
                out |= succ_a[p]
            mask >>= 1
            p += 1
        return out

    def run_mask(self, mask: int, widx: list[int]) -> int:
        for a in widx:
            mask = self.step_mask(mask, a)
            if not mask:
                break
        return mask

    def close_mask(self, mask: int) -> int:
        out = 0
        p = 0
        while mask:
            if mask & 1:
                out |= self.closure[p]
            mask >>= 1
            p += 1
        return out

    def min_dist(self, mask: int, dist: list) -> float:
        best = _INF
        p = 0
        while mask:
            if mask & 1 and dist[p] < best:
                best = dist[p]
            mask >>= 1
            p += 1
        return best

    def indices(self, w: Word) -> list[int]:
        return [self.alphabet.index(sym) for sym in w]


def closure_member_bruteforce(
    m: Machine, kind: ClosureKind, w: Word, pad: int
) -> bool:
    """Is w in the chosen closure of L(m)?  Sound always; exact for
    pref/suff/fact once pad covers the shortest needed context lengths
    (2 * state_count is always enough); exact for subw unconditionally."""
    t = _Tables(m)
    widx = t.indices(w)
    if kind is ClosureKind.PREF:
        end = t.run_mask(t.initial, widx)
        return t.min_dist(end, t.dist_to_final) <= pad
    if kind is ClosureKind.SUFF:
        for p in range(t.n):
            if t.dist_from_start[p] <= pad:
                if t.run_mask(1 << p, widx) & t.final:
                    return True
        return False
    if kind is ClosureKind.FACT:
        for p in range(t.n):
            before = t.dist_from_start[p]
            if before > pad:
                continue
            end = t.run_mask(1 << p, widx)
            if before + t.min_dist(end, t.dist_to_final) <= pad:
                return True
        return False
    if kind is ClosureKind.SUBW:
        return _subw_member(t, widx)
    raise AssertionError(f"unknown closure kind: {kind}")


def _subw_member(t: _Tables, widx: list[int]) -> bool:
    # Exact embedding search: carry the set of states reachable by paths
    # whose labels contain the processed part of w as a subsequence, the
    # path ending on the step that matched the last processed letter.
    mask = t.initial
    for a in widx:
        mask = t.step_mask(t.close_mask(mask), a)
        if not mask:
            return False
    return bool(t.close_mask(mask) & t.final)


def universal_up_to(
    m: Machine, kind: ClosureKind, b: EnumBound, pad: int
) -> Decision:
    """Check every word of length <= max_len for closure membership; the
    first missing word (canonical order) becomes the witness.

    This is the memoized sweep form of closure_member_bruteforce: words
    whose membership-relevant residual state coincides with an earlier
    word's are not re-expanded, which changes nothing about the verdict or
    the canonical witness.
    """
    t = _Tables(m)
    k = t.k
    syms = t.alphabet.symbols

    if kind is ClosureKind.PREF:
        ok_mask = _mask(
            p for p in range(t.n) if t.dist_to_final[p] <= pad
        )
        start = t.initial

        def advance(state: int, a: int) -> int:
            return t.step_mask(state, a)

        def member(state: int) -> bool:
            return bool(state & ok_mask)

    elif kind is ClosureKind.SUFF:
        origins = [p for p in range(t.n) if t.dist_from_start[p] <= pad]
        start = tuple(1 << p for p in origins)

        def advance(state, a):
            return tuple(t.step_mask(s, a) for s in state)

        def member(state) -> bool:
            return any(s & t.final for s in state)

    elif kind is ClosureKind.FACT:
        origins = [p for p in range(t.n) if t.dist_from_start[p] <= pad]
        ok_masks = [
            _mask(
                q
                for q in range(t.n)
                if t.dist_from_start[p] + t.dist_to_final[q] <= pad
            )
            for p in origins
        ]
        start = tuple(1 << p for p in origins)

        def advance(state, a):
            return tuple(t.step_mask(s, a) for s in state)

        def member(state) -> bool:
            return any(s & ok for s, ok in zip(state, ok_masks))

    elif kind is ClosureKind.SUBW:
        live_final = _mask(
            p for p in range(t.n) if t.closure[p] & t.final
        )
        start = t.initial

        def advance(state: int, a: int) -> int:
            return t.step_mask(t.close_mask(state), a)

        def member(state: int) -> bool:
            return bool(state & live_final)

    else:
        raise AssertionError(f"unknown closure kind: {kind}")

    if not member(start):
        return Decision(False, ())
    seen = {start}
    frontier = [(start, ())]
    for _ in range(b.max_len):
        nxt = []
        for state, word in frontier:
            for a in range(k):
                new = advance(state, a)
                if new in seen:
                    continue
                seen.add(new)
                if b.max_words is not None and len(seen) > b.max_words:
                    raise ResourceError("sweep exceeded max_words")
                if not member(new):
                    return Decision(False, word + (syms[a],))
                nxt.append((new, word + (syms[a],)))
        frontier = nxt
    return Decision(True)


def _mask(states) -> int:
    out = 0
    for p in states:
        out |= 1 << p
    return out

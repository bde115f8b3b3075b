"""Complete DFAs and generalized NFAs (initial sets, optional eps-edges).

States are dense integer ids 0..n-1.  Symbols are arbitrary non-whitespace
string tokens; their position in the Alphabet gives the canonical order used
everywhere for witness tie-breaking.  All values are immutable; every
operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

from .errors import InputError

Word = tuple[str, ...]
EPSILON: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Ordered universe of distinct symbol tokens."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise InputError("alphabet must be nonempty")
        seen = set()
        for sym in self.symbols:
            if not sym or any(ch.isspace() for ch in sym):
                raise InputError(f"bad symbol token: {sym!r}")
            if sym in seen:
                raise InputError(f"duplicate symbol: {sym!r}")
            seen.add(sym)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    def index(self, sym: str) -> int:
        try:
            return self._index[sym]  # type: ignore[attr-defined]
        except KeyError:
            raise InputError(f"symbol {sym!r} not in alphabet") from None

    def extended(self, extra: Iterable[str]) -> "Alphabet":
        return Alphabet(self.symbols + tuple(extra))

    def __contains__(self, sym: object) -> bool:
        return sym in self._index  # type: ignore[attr-defined]

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Decision:
    """Boolean verdict plus, optionally, the canonical shortest witness.

    The witness, when present, is the shortest word outside the tested
    language, ties broken lexicographically by alphabet order.  (Mortality
    checks repurpose `universal` as "mortal" and attach the killing word.)
    """

    universal: bool
    witness: Word | None = None


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exponential searches (subset BFS, monoid BFS)."""

    max_subsets: int = 1 << 20
    max_word_len: int | None = None

    def __post_init__(self) -> None:
        if self.max_subsets <= 0:
            raise InputError("max_subsets must be positive")
        if self.max_word_len is not None and self.max_word_len <= 0:
            raise InputError("max_word_len must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Dfa:
    """Complete DFA: delta is total, hence state_count >= 1."""

    alphabet: Alphabet
    state_count: int
    start: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]  # delta[state][symbol_index]

    def __post_init__(self) -> None:
        n, k = self.state_count, len(self.alphabet)
        if n < 1:
            raise InputError("a complete DFA needs at least one state")
        if not (0 <= self.start < n):
            raise InputError(f"start state {self.start} out of range")
        if not all(0 <= q < n for q in self.finals):
            raise InputError("final state out of range")
        if len(self.delta) != n or any(len(row) != k for row in self.delta):
            raise InputError("delta must be a total (state, symbol) map")
        if not all(0 <= t < n for row in self.delta for t in row):
            raise InputError("delta target out of range")

    @classmethod
    def from_map(
        cls,
        alphabet: Alphabet,
        state_count: int,
        start: int,
        finals: Iterable[int],
        trans: Mapping[tuple[int, str], int],
    ) -> "Dfa":
        k = len(alphabet)
        rows = [[-1] * k for _ in range(state_count)]
        for (p, sym), q in trans.items():
            rows[p][alphabet.index(sym)] = q
        for p in range(state_count):
            for a in range(k):
                if rows[p][a] < 0:
                    raise InputError(
                        f"incomplete DFA: no transition from {p} "
                        f"on {alphabet.symbols[a]!r}"
                    )
        return cls(
            alphabet,
            state_count,
            start,
            frozenset(finals),
            tuple(tuple(row) for row in rows),
        )

    def run(self, w: Word, start: int | None = None) -> int:
        q = self.start if start is None else start
        for sym in w:
            q = self.delta[q][self.alphabet.index(sym)]
        return q


@dataclass(frozen=True)
class Nfa:
    """Generalized NFA: arbitrary initial set, optional eps-edges.

    A zero-state Nfa is legal and denotes the empty language.
    """

    alphabet: Alphabet
    state_count: int
    initials: frozenset[int]
    finals: frozenset[int]
    moves: tuple[tuple[frozenset[int], ...], ...]  # moves[state][symbol_index]
    eps: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self) -> None:
        n, k = self.state_count, len(self.alphabet)
        if n < 0:
            raise InputError("negative state count")
        if not self.eps:
            object.__setattr__(self, "eps", tuple(frozenset() for _ in range(n)))
        if not all(0 <= q < n for q in self.initials | self.finals):
            raise InputError("initial/final state out of range")
        if len(self.moves) != n or any(len(row) != k for row in self.moves):
            raise InputError("moves must have one entry per (state, symbol)")
        if not all(0 <= t < n for row in self.moves for ts in row for t in ts):
            raise InputError("move target out of range")
        if len(self.eps) != n or not all(
            0 <= t < n for ts in self.eps for t in ts
        ):
            raise InputError("bad eps map")

    @classmethod
    def from_edges(
        cls,
        alphabet: Alphabet,
        state_count: int,
        initials: Iterable[int],
        finals: Iterable[int],
        edges: Iterable[tuple[int, str, int]] = (),
        eps_edges: Iterable[tuple[int, int]] = (),
    ) -> "Nfa":
        k = len(alphabet)
        rows: list[list[set[int]]] = [
            [set() for _ in range(k)] for _ in range(state_count)
        ]
        for p, sym, q in edges:
            rows[p][alphabet.index(sym)].add(q)
        eps: list[set[int]] = [set() for _ in range(state_count)]
        for p, q in eps_edges:
            eps[p].add(q)
        return cls(
            alphabet,
            state_count,
            frozenset(initials),
            frozenset(finals),
            tuple(tuple(frozenset(s) for s in row) for row in rows),
            tuple(frozenset(s) for s in eps),
        )

    @property
    def has_eps(self) -> bool:
        return any(self.eps)

    def edges(self) -> Iterator[tuple[int, str, int]]:
        for p, row in enumerate(self.moves):
            for a, targets in enumerate(row):
                for q in targets:
                    yield p, self.alphabet.symbols[a], q


Machine = Union[Dfa, Nfa]


def eps_closure(m: Nfa, states: Iterable[int]) -> frozenset[int]:
    seen = set(states)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for q in m.eps[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def step(m: Nfa, states: Iterable[int], sym_idx: int) -> frozenset[int]:
    out: set[int] = set()
    for p in states:
        out |= m.moves[p][sym_idx]
    return eps_closure(m, out)


def accepts(m: Machine, w: Word) -> bool:
    """True iff some run from an initial state on w ends in a final state."""
    if isinstance(m, Dfa):
        return m.run(w) in m.finals
    cur = eps_closure(m, m.initials)
    for sym in w:
        cur = step(m, cur, m.alphabet.index(sym))
        if not cur:
            return False
    return bool(cur & m.finals)


def _forward_reachable(m: Nfa) -> set[int]:
    seen = set(m.initials)
    queue = deque(seen)
    while queue:
        p = queue.popleft()
        for targets in m.moves[p]:
            for q in targets:
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        for q in m.eps[p]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def _backward_reachable(m: Nfa) -> set[int]:
    rev: list[list[int]] = [[] for _ in range(m.state_count)]
    for p, row in enumerate(m.moves):
        for targets in row:
            for q in targets:
                rev[q].append(p)
    for p, targets in enumerate(m.eps):
        for q in targets:
            rev[q].append(p)
    seen = set(m.finals)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in rev[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def reachable_states(m: Nfa) -> frozenset[int]:
    """States reachable from some initial state."""
    return frozenset(_forward_reachable(m))


def coreachable_states(m: Nfa) -> frozenset[int]:
    """States from which some final state is reachable."""
    return frozenset(_backward_reachable(m))


def restrict(m: Nfa, keep: Iterable[int]) -> Nfa:
    """Sub-NFA on the given states, renumbered in increasing id order."""
    kept = sorted(set(keep))
    remap = {old: new for new, old in enumerate(kept)}
    k = len(m.alphabet)
    moves = tuple(
        tuple(
            frozenset(remap[q] for q in m.moves[old][a] if q in remap)
            for a in range(k)
        )
        for old in kept
    )
    eps = tuple(
        frozenset(remap[q] for q in m.eps[old] if q in remap) for old in kept
    )
    return Nfa(
        m.alphabet,
        len(kept),
        frozenset(remap[q] for q in m.initials if q in remap),
        frozenset(remap[q] for q in m.finals if q in remap),
        moves,
        eps,
    )


def trim(m: Nfa) -> Nfa:
    """Keep exactly the states both reachable and co-reachable.

    The result may have zero states when L(m) is empty.
    """
    return restrict(m, _forward_reachable(m) & _backward_reachable(m))


def reverse(m: Nfa) -> Nfa:
    """NFA for the reversed language: flip every edge, swap initials/finals."""
    k = len(m.alphabet)
    rows: list[list[set[int]]] = [
        [set() for _ in range(k)] for _ in range(m.state_count)
    ]
    for p, row in enumerate(m.moves):
        for a, targets in enumerate(row):
            for q in targets:
                rows[q][a].add(p)
    eps: list[set[int]] = [set() for _ in range(m.state_count)]
    for p, targets in enumerate(m.eps):
        for q in targets:
            eps[q].add(p)
    return Nfa(
        m.alphabet,
        m.state_count,
        m.finals,
        m.initials,
        tuple(tuple(frozenset(s) for s in row) for row in rows),
        tuple(frozenset(s) for s in eps),
    )


def remove_epsilon(m: Nfa) -> Nfa:
    """Eliminate eps-edges without changing the state count or the language."""
    if not m.has_eps:
        return m
    k = len(m.alphabet)
    closures = [eps_closure(m, (q,)) for q in range(m.state_count)]
    moves = tuple(
        tuple(
            frozenset().union(*(m.moves[p][a] for p in closures[q]))
            for a in range(k)
        )
        for q in range(m.state_count)
    )
    finals = frozenset(
        q for q in range(m.state_count) if closures[q] & m.finals
    )
    return Nfa(m.alphabet, m.state_count, m.initials, finals, moves)


def nfa_of_dfa(m: Dfa) -> Nfa:
    moves = tuple(
        tuple(frozenset((t,)) for t in row) for row in m.delta
    )
    return Nfa(m.alphabet, m.state_count, frozenset((m.start,)), m.finals, moves)


def single_start(m: Nfa) -> Nfa:
    """Single-initial-state, eps-free normal form; adds at most one state."""
    if len(m.initials) == 1 and not m.has_eps:
        return m
    fresh = m.state_count
    k = len(m.alphabet)
    moves = m.moves + ((frozenset(),) * k,)
    eps = m.eps + (frozenset(m.initials),)
    widened = Nfa(
        m.alphabet, m.state_count + 1, frozenset((fresh,)), m.finals, moves, eps
    )
    return remove_epsilon(widened)

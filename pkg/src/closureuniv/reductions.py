"""Hardness gadgets and the Boolean-matrix correspondence.

suffix_gadget and factor_gadget turn a tuple of DFAs over a common alphabet
into one machine whose suffix (resp. factor) closure is universal exactly
when the union of the input languages is universal.  matrices_of_nfa maps
an eps-free NFA to one Boolean matrix per symbol so that matrix products
track multi-step reachability, and is_mortal searches the generated monoid
for the all-zeros product.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import (
    DEFAULT_BUDGET,
    Decision,
    Dfa,
    EPSILON,
    Nfa,
    SearchBudget,
    Word,
    remove_epsilon,
)
from .errors import InputError, ResourceError

Matrix = tuple[tuple[int, ...], ...]  # square, entries 0/1


@dataclass(frozen=True)
class MatrixSet:
    """Square Boolean matrices indexed by symbol, in a fixed symbol order."""

    dim: int
    symbols: tuple[str, ...]
    mats: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError("matrix dimension must be positive")
        if not self.symbols or len(self.symbols) != len(set(self.symbols)):
            raise InputError("need at least one distinct symbol")
        if len(self.mats) != len(self.symbols):
            raise InputError("one matrix per symbol required")
        for mat in self.mats:
            if len(mat) != self.dim or any(len(row) != self.dim for row in mat):
                raise InputError("all matrices must be dim x dim")
            if any(entry not in (0, 1) for row in mat for entry in row):
                raise InputError("matrix entries must be 0 or 1")

    def matrix(self, sym: str) -> Matrix:
        try:
            return self.mats[self.symbols.index(sym)]
        except ValueError:
            raise InputError(f"no matrix for symbol {sym!r}") from None


def bool_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(
            1 if any(a[i][t] and b[t][j] for t in range(n)) else 0
            for j in range(n)
        )
        for i in range(n)
    )


def product_matrix(ms: MatrixSet, w: Word) -> Matrix:
    """Product over the symbols of w; the empty word gives the identity."""
    out: Matrix = tuple(
        tuple(1 if i == j else 0 for j in range(ms.dim)) for i in range(ms.dim)
    )
    for sym in w:
        out = bool_mul(out, ms.matrix(sym))
    return out


def matrices_of_nfa(m: Nfa) -> MatrixSet:
    if m.has_eps:
        raise InputError("matrices_of_nfa needs an eps-free NFA")
    if m.state_count < 1:
        raise InputError("matrices_of_nfa needs at least one state")
    n = m.state_count
    mats = tuple(
        tuple(
            tuple(1 if j in m.moves[i][a] else 0 for j in range(n))
            for i in range(n)
        )
        for a in range(len(m.alphabet))
    )
    return MatrixSet(n, m.alphabet.symbols, mats)


def is_mortal(ms: MatrixSet, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """Is some (nonempty) product of the matrices all zeros?

    Decision.universal is repurposed as "mortal"; when mortal, the witness
    is the canonical shortest killing word.  The search is over the finite
    set of distinct reachable products, budget-guarded.
    """
    zero: Matrix = tuple(
        tuple(0 for _ in range(ms.dim)) for _ in range(ms.dim)
    )
    parents: dict[Matrix, tuple[Matrix, int] | None] = {}
    queue: deque[Matrix] = deque()
    for a, mat in enumerate(ms.mats):
        if mat in parents:
            continue
        parents[mat] = (None, a)  # type: ignore[arg-type]
        if mat == zero:
            return Decision(True, (ms.symbols[a],))
        queue.append(mat)
    while queue:
        cur = queue.popleft()
        for a, mat in enumerate(ms.mats):
            nxt = bool_mul(cur, mat)
            if nxt in parents:
                continue
            parents[nxt] = (cur, a)
            if len(parents) > budget.max_subsets:
                raise ResourceError("mortality search exceeded max_subsets")
            if nxt == zero:
                word: list[str] = [ms.symbols[a]]
                node = cur
                while True:
                    prev, sym = parents[node]  # type: ignore[misc]
                    word.append(ms.symbols[sym])
                    if prev is None:
                        break
                    node = prev
                return Decision(True, tuple(reversed(word)))
            queue.append(nxt)
    return Decision(False)


@dataclass(frozen=True)
class GadgetSpec:
    """Inputs to the reduction gadgets: DFAs over a common alphabet plus
    two fresh symbols used for the control structure."""

    machines: tuple[Dfa, ...]
    sym_a: str = "_a"
    sym_c: str = "_c"

    def __post_init__(self) -> None:
        if not self.machines:
            raise InputError("gadget needs at least one machine")
        sigma = self.machines[0].alphabet
        if any(m.alphabet != sigma for m in self.machines):
            raise InputError("gadget machines must share one alphabet")
        if self.sym_a == self.sym_c:
            raise InputError("the two fresh symbols must differ")
        if self.sym_a in sigma or self.sym_c in sigma:
            raise InputError("fresh symbols collide with the input alphabet")


def union_universal(
    machines: tuple[Dfa, ...] | list[Dfa],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Decision:
    """Is the union of the DFA languages everything?  Product-machine BFS;
    a tuple of simultaneously non-final states certifies a missing word."""
    machines = tuple(machines)
    if not machines:
        return Decision(False, EPSILON)
    alphabet = machines[0].alphabet
    if any(m.alphabet != alphabet for m in machines):
        raise InputError("union machines must share one alphabet")
    syms = alphabet.symbols
    k = len(syms)

    def rejected(states: tuple[int, ...]) -> bool:
        return all(q not in m.finals for q, m in zip(states, machines))

    start = tuple(m.start for m in machines)
    if rejected(start):
        return Decision(False, EPSILON)
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], int] | None] = {
        start: None
    }
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in range(k):
            nxt = tuple(m.delta[q][a] for q, m in zip(cur, machines))
            if nxt in parents:
                continue
            parents[nxt] = (cur, a)
            if len(parents) > budget.max_subsets:
                raise ResourceError("union search exceeded max_subsets")
            if rejected(nxt):
                word: list[str] = []
                node = nxt
                while parents[node] is not None:
                    prev, sym = parents[node]  # type: ignore[misc]
                    word.append(syms[sym])
                    node = prev
                return Decision(False, tuple(reversed(word)))
            queue.append(nxt)
    return Decision(True)


def _split_initial(m: Dfa) -> Dfa:
    """Ensure no transition enters the start state, adding one state if needed."""
    if all(t != m.start for row in m.delta for t in row):
        return m
    fresh = m.state_count
    rows = list(m.delta) + [m.delta[m.start]]
    finals = set(m.finals)
    if m.start in finals:
        finals.add(fresh)
    return Dfa(m.alphabet, m.state_count + 1, fresh, frozenset(finals), tuple(rows))


def suffix_gadget(spec: GadgetSpec) -> Dfa:
    """Complete DFA whose suffix closure is universal iff the union of the
    input languages is universal.

    Layout: a looping accepting start q; each input machine copied with all
    states accepting; per machine a rejecting collector r_i and an accepting
    collector s_i fed by the former non-final / final states on the fresh
    symbol c; the fresh symbol a restarts the current machine, chains the
    machine starts in a cycle, and sends q into the first machine.
    """
    machines = [_split_initial(m) for m in spec.machines]
    sigma = machines[0].alphabet
    delta_alphabet = sigma.extended((spec.sym_a, spec.sym_c))
    k_sigma = len(sigma)
    a_idx, c_idx = k_sigma, k_sigma + 1
    n = len(machines)

    # State ids: q = 0, then per machine its states, then r_i, s_i.
    offsets: list[int] = []
    next_id = 1
    for m in machines:
        offsets.append(next_id)
        next_id += m.state_count + 2  # states, r_i, s_i
    total = next_id
    r_of = [offsets[i] + machines[i].state_count for i in range(n)]
    s_of = [r_of[i] + 1 for i in range(n)]
    start_of = [offsets[i] + machines[i].start for i in range(n)]

    rows = [[0] * (k_sigma + 2) for _ in range(total)]
    finals: set[int] = {0}
    # q: loop on Sigma and c, enter the machine cycle on a.
    rows[0] = [0] * k_sigma + [start_of[0], 0]
    for i, m in enumerate(machines):
        off = offsets[i]
        for p in range(m.state_count):
            sid = off + p
            finals.add(sid)  # every copied state becomes accepting
            row = rows[sid]
            for x in range(k_sigma):
                row[x] = off + m.delta[p][x]
            row[c_idx] = s_of[i] if p in m.finals else r_of[i]
            if p == m.start:
                row[a_idx] = start_of[(i + 1) % n]
            else:
                row[a_idx] = start_of[i]
        for collector in (r_of[i], s_of[i]):
            row = rows[collector]
            for x in range(k_sigma):
                row[x] = s_of[i]
            row[c_idx] = s_of[i]
            row[a_idx] = start_of[i]
        finals.add(s_of[i])
    return Dfa(
        delta_alphabet,
        total,
        0,
        frozenset(finals),
        tuple(tuple(row) for row in rows),
    )


def factor_gadget(spec: GadgetSpec) -> Nfa:
    """NFA whose factor closure is universal iff the union of the input
    languages is universal.

    A three-state control (q, r, s) accepts exactly the words with no
    factor of the shape a-then-Sigma*-then-c; a guess state t fans out to
    every machine start on a, and the former final states return to q on c.
    The returned NFA is eps-free.
    """
    machines = [_split_initial(m) for m in spec.machines]
    sigma = machines[0].alphabet
    delta_alphabet = sigma.extended((spec.sym_a, spec.sym_c))
    n = len(machines)

    # State ids: q=0, r=1, s=2, t=3, then machine copies.
    offsets: list[int] = []
    next_id = 4
    for m in machines:
        offsets.append(next_id)
        next_id += m.state_count
    total = next_id
    start_of = [offsets[i] + machines[i].start for i in range(n)]

    edges: list[tuple[int, str, int]] = []
    sym_a, sym_c = spec.sym_a, spec.sym_c
    for x in sigma.symbols:
        edges.append((0, x, 0))
        edges.append((1, x, 1))
    edges.append((0, sym_c, 0))
    edges.append((0, sym_a, 1))
    edges.append((0, sym_a, 3))
    edges.append((1, sym_a, 1))
    edges.append((1, sym_a, 3))
    edges.append((1, sym_c, 2))  # forbidden factor completed: s is a trap
    eps_edges = [(3, start_of[j]) for j in range(n)]
    for i, m in enumerate(machines):
        off = offsets[i]
        for p in range(m.state_count):
            for x in range(len(sigma)):
                edges.append(
                    (off + p, sigma.symbols[x], off + m.delta[p][x])
                )
            if p in m.finals:
                edges.append((off + p, sym_c, 0))
    nfa = Nfa.from_edges(
        delta_alphabet,
        total,
        initials=(0,),
        finals=(0, 1),
        edges=edges,
        eps_edges=eps_edges,
    )
    return remove_epsilon(nfa)

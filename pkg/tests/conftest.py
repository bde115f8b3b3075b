import itertools
import random

from closureuniv import Alphabet, Dfa, Nfa

AB = Alphabet(("a", "b"))


def W(text):
    """Word from a compact string, one symbol per character."""
    return tuple(text)


def random_dfa(rng, max_states=4, alphabet=AB):
    n = rng.randint(1, max_states)
    k = len(alphabet)
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)
    )
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(alphabet, n, rng.randrange(n), finals, delta)


def random_nfa(rng, max_states=4, alphabet=AB, edge_prob=0.3):
    n = rng.randint(1, max_states)
    k = len(alphabet)
    edges = [
        (p, alphabet.symbols[a], q)
        for p in range(n)
        for a in range(k)
        for q in range(n)
        if rng.random() < edge_prob
    ]
    initials = [q for q in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
    finals = [q for q in range(n) if rng.random() < 0.5]
    return Nfa.from_edges(alphabet, n, initials, finals, edges)


def all_small_dfas(max_states, alphabet=AB):
    """Every complete DFA with up to max_states states over the alphabet:
    all transition tables, all start states, all final sets."""
    k = len(alphabet)
    for n in range(1, max_states + 1):
        rows = list(itertools.product(range(n), repeat=k))
        for delta in itertools.product(rows, repeat=n):
            for start in range(n):
                for bits in range(1 << n):
                    finals = frozenset(
                        q for q in range(n) if bits >> q & 1
                    )
                    yield Dfa(alphabet, n, start, finals, delta)


def make_rng(seed):
    return random.Random(seed)

import pytest

from closureuniv import (
    Alphabet,
    ClosureKind,
    Dfa,
    Nfa,
    ResourceError,
    SearchBudget,
    accepts,
    closure_nfa,
    closure_universal,
    fact_universal_dfa,
    nfa_of_dfa,
    nfa_universal,
    pref_universal_dfa,
    subw_universal,
)
from closureuniv.oracle import EnumBound, universal_up_to

from conftest import AB, W, make_rng, random_dfa, random_nfa

KINDS = (ClosureKind.PREF, ClosureKind.SUFF, ClosureKind.FACT, ClosureKind.SUBW)


def sigma_star_dfa():
    return Dfa(AB, 1, 0, frozenset((0,)), ((0, 0),))


def test_pref_universal_on_sigma_star():
    assert pref_universal_dfa(sigma_star_dfa()).universal


def test_pref_universal_witness_is_canonical():
    # Language b*; the shortest word outside Pref is 'a', not any longer one.
    d = Dfa(AB, 2, 0, frozenset((0,)), ((1, 0), (1, 1)))
    verdict = pref_universal_dfa(d)
    assert not verdict.universal
    assert verdict.witness == W("a")


def test_pref_empty_language_witness_is_epsilon():
    d = Dfa(AB, 1, 0, frozenset(), ((0, 0),))
    verdict = pref_universal_dfa(d)
    assert not verdict.universal and verdict.witness == ()


def test_nfa_universal_on_sigma_star_and_on_empty():
    assert nfa_universal(nfa_of_dfa(sigma_star_dfa())).universal
    empty = Nfa.from_edges(AB, 0, (), ())
    verdict = nfa_universal(empty)
    assert not verdict.universal and verdict.witness == ()


def test_nfa_universal_witness_is_shortest_and_lexicographically_least():
    rng = make_rng(211)
    for _ in range(60):
        m = random_nfa(rng)
        verdict = nfa_universal(m)
        if verdict.universal:
            continue
        w = verdict.witness
        assert not accepts(m, w)
        # No shorter missing word, and none of equal length that is smaller
        # in alphabet order.
        from closureuniv.oracle import iter_words

        for u in iter_words(AB, len(w)):
            if u == w:
                break
            assert accepts(m, u), (m, w, u)


def test_nfa_universal_budget_exhaustion():
    rng = make_rng(223)
    tight = SearchBudget(max_subsets=1)
    saw_resource = False
    for _ in range(40):
        m = random_nfa(rng, max_states=4)
        try:
            nfa_universal(m, tight)
        except ResourceError:
            saw_resource = True
    assert saw_resource


def test_nfa_universal_max_word_len_budget():
    # An all-final unary cycle is universal, but the subset search has to
    # walk the whole cycle; a small depth cap stops it first.
    cycle = Dfa(
        Alphabet(("a",)),
        8,
        0,
        frozenset(range(8)),
        tuple(((i + 1) % 8,) for i in range(8)),
    )
    with pytest.raises(ResourceError):
        nfa_universal(nfa_of_dfa(cycle), SearchBudget(max_word_len=2))
    assert nfa_universal(nfa_of_dfa(cycle)).universal


def test_fact_universal_consults_synchronizing_words(monkeypatch):
    # Dead trap state 2 reachable from everywhere, so there is no universal
    # state and the verdict must come from the synchronizing-word step.
    d = Dfa(AB, 3, 0, frozenset((0,)), ((1, 2), (0, 2), (2, 2)))
    calls = []
    from closureuniv import sync

    real = sync.is_synchronizing

    def spy(m):
        calls.append(m)
        return real(m)

    monkeypatch.setattr(sync, "is_synchronizing", spy)
    assert not fact_universal_dfa(d).universal
    assert calls, "expected the synchronizing-word check to run"


def test_fact_universal_via_universal_state_skips_sync(monkeypatch):
    # A permutation DFA has no dead states, so every state is universal and
    # the answer is yes without ever testing for a synchronizing word.
    d = Dfa(AB, 2, 0, frozenset((0,)), ((1, 1), (0, 0)))
    calls = []
    from closureuniv import sync

    monkeypatch.setattr(
        sync, "is_synchronizing", lambda m: calls.append(m) or True
    )
    assert fact_universal_dfa(d).universal
    assert not calls


def test_fact_universal_dead_state_merge():
    # A trap state makes the machine synchronizing, so not fact-universal.
    d = Dfa(AB, 2, 0, frozenset((0,)), ((0, 1), (1, 1)))
    assert not fact_universal_dfa(d).universal


def test_subw_universal_on_single_loop_state():
    assert subw_universal(nfa_of_dfa(sigma_star_dfa())).universal


def test_subw_universal_needs_one_scc_covering_alphabet():
    # a* b*: both symbols appear on cycles but never in the same SCC.
    m = Nfa.from_edges(
        AB, 2, (0,), (0, 1), [(0, "a", 0), (0, "b", 1), (1, "b", 1)]
    )
    verdict = subw_universal(m)
    assert not verdict.universal
    assert verdict.witness == W("ba")


def test_subw_universal_empty_language():
    empty = Nfa.from_edges(AB, 1, (0,), ())
    verdict = subw_universal(empty)
    assert not verdict.universal and verdict.witness == ()


def test_closure_universal_agrees_with_generic_search():
    rng = make_rng(229)
    for _ in range(60):
        d = random_dfa(rng)
        nfa = nfa_of_dfa(d)
        for kind in KINDS:
            fast = closure_universal(d, kind)
            slow = nfa_universal(closure_nfa(nfa, kind))
            assert fast.universal == slow.universal, (d, kind)
            if not fast.universal and fast.witness is not None:
                assert fast.witness == slow.witness, (d, kind)


def test_closure_universal_agrees_with_oracle_sweep():
    rng = make_rng(233)
    for _ in range(40):
        d = random_dfa(rng, max_states=3)
        pad = 2 * d.state_count
        for kind in KINDS:
            fast = closure_universal(d, kind)
            ground = universal_up_to(d, kind, EnumBound(7), pad)
            assert fast.universal == ground.universal, (d, kind)

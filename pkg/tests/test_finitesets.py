from closureuniv import (
    Alphabet,
    ClosureKind,
    OmegaSide,
    WordSet,
    accepts,
    closure_nfa,
    fact_star_universal,
    nfa_universal,
    omega_universal,
    pref_star_universal,
    star_nfa,
    suff_star_universal,
)
from closureuniv.oracle import iter_words

from conftest import AB, W, make_rng


def ws(*texts):
    return WordSet.of(AB, (W(t) for t in texts))


def random_wordset(rng, max_words=5, max_len=4):
    count = rng.randint(0, max_words)
    words = [
        W(
            "".join(
                rng.choice("ab") for _ in range(rng.randint(1, max_len))
            )
        )
        for _ in range(count)
    ]
    return WordSet.of(AB, words)


def test_star_nfa_language():
    s = ws("ab", "b")
    m = star_nfa(s)
    assert accepts(m, W(""))
    assert accepts(m, W("abb"))
    assert accepts(m, W("bab"))
    assert not accepts(m, W("a"))
    assert not accepts(m, W("ba"))


def test_pref_star_universal_examples():
    # {a, ba, bb} tiles every word going forward.
    assert pref_star_universal(ws("a", "ba", "bb")).universal
    # {a, b} trivially universal; {a} misses b immediately.
    assert pref_star_universal(ws("a", "b")).universal
    verdict = pref_star_universal(ws("a"))
    assert not verdict.universal and verdict.witness == W("b")


def test_pref_star_empty_set():
    verdict = pref_star_universal(WordSet.of(AB, ()))
    assert not verdict.universal and verdict.witness == W("a")


def test_pref_star_prefix_pruning():
    # 'a' being present makes every longer a-word irrelevant.
    assert pref_star_universal(ws("a", "ab", "b")).universal
    verdict = pref_star_universal(ws("a", "bab"))
    assert not verdict.universal
    assert verdict.witness == W("bb")


def test_suff_star_mirrors_pref_star():
    assert suff_star_universal(ws("a", "ab", "bb")).universal
    verdict = suff_star_universal(ws("a"))
    assert not verdict.universal and verdict.witness == W("b")
    verdict = suff_star_universal(ws("a", "bab"))
    assert not verdict.universal and verdict.witness == W("bb")


def test_fact_star_universal_examples():
    # Fact((ab)*) contains every word over a single letter? No: 'aa' is not
    # a factor, so {ab} alone is not factor-universal.
    verdict = fact_star_universal(ws("ab"))
    assert not verdict.universal and verdict.witness == W("aa")
    assert fact_star_universal(ws("a", "b")).universal
    # Not prefix-universal, but every word appears inside (aab)*.
    s = ws("aab")
    assert not pref_star_universal(s).universal
    assert not fact_star_universal(s).universal


def test_pref_star_agrees_with_nfa_route():
    rng = make_rng(601)
    for _ in range(200):
        s = random_wordset(rng)
        trie_verdict = pref_star_universal(s)
        nfa_verdict = nfa_universal(
            closure_nfa(star_nfa(s), ClosureKind.PREF)
        )
        assert trie_verdict.universal == nfa_verdict.universal, s
        if not trie_verdict.universal:
            assert trie_verdict.witness == nfa_verdict.witness, s


def test_suff_star_agrees_with_nfa_route():
    rng = make_rng(607)
    for _ in range(200):
        s = random_wordset(rng)
        trie_verdict = suff_star_universal(s)
        nfa_verdict = nfa_universal(
            closure_nfa(star_nfa(s), ClosureKind.SUFF)
        )
        assert trie_verdict.universal == nfa_verdict.universal, s
        if not trie_verdict.universal:
            assert trie_verdict.witness == nfa_verdict.witness, s


def test_omega_dispatch():
    s = ws("a", "ba", "bb")
    assert omega_universal(s, OmegaSide.RIGHT).universal
    assert not omega_universal(s, OmegaSide.LEFT).universal
    t = ws("a", "b")
    for side in OmegaSide:
        assert omega_universal(t, side).universal

import pytest

from closureuniv import (
    Alphabet,
    Dfa,
    InputError,
    Nfa,
    WordSet,
    matrices_of_nfa,
    remove_epsilon,
)
from closureuniv.cli import run_cli
from closureuniv.formats import (
    parse_automaton,
    parse_matrixset,
    parse_wordset,
    serialize_automaton,
    serialize_matrixset,
    serialize_wordset,
)

from conftest import AB, W, make_rng, random_dfa, random_nfa


def test_automaton_roundtrip_dfa():
    rng = make_rng(801)
    for _ in range(40):
        d = random_dfa(rng)
        assert parse_automaton(serialize_automaton(d)) == d


def test_automaton_roundtrip_nfa():
    rng = make_rng(803)
    for _ in range(40):
        m = random_nfa(rng)
        assert parse_automaton(serialize_automaton(m)) == m


def test_serialization_is_canonical():
    d = random_dfa(make_rng(5))
    text = serialize_automaton(d)
    assert serialize_automaton(parse_automaton(text)) == text


def test_serialize_rejects_eps_nfa():
    m = Nfa.from_edges(AB, 2, (0,), (1,), eps_edges=[(0, 1)])
    with pytest.raises(InputError):
        serialize_automaton(m)
    assert parse_automaton(serialize_automaton(remove_epsilon(m))) is not None


def test_parse_automaton_errors():
    with pytest.raises(InputError):
        parse_automaton("type dfa\n")  # missing everything else
    with pytest.raises(InputError):
        parse_automaton(
            "type dfa\nalphabet a\nstates 1\ninitial 0 0\nfinal\ntrans 0 a 0\n"
        )
    with pytest.raises(InputError):
        parse_automaton(
            "type dfa\nalphabet a\nstates 2\ninitial 0\nfinal\n"
            "trans 0 a 0\ntrans 0 a 1\ntrans 1 a 1\n"
        )  # duplicate transition
    with pytest.raises(InputError):
        parse_automaton(
            "type dfa\nalphabet a b\nstates 1\ninitial 0\nfinal\ntrans 0 a 0\n"
        )  # incomplete
    with pytest.raises(InputError):
        parse_automaton("flavor dfa\n")


def test_wordset_roundtrip_with_eps():
    s = WordSet.of(AB, [(), W("ab"), W("b")])
    text = serialize_wordset(s)
    assert "eps" in text.splitlines()
    assert parse_wordset(text) == s


def test_matrixset_roundtrip():
    rng = make_rng(809)
    for _ in range(20):
        m = random_nfa(rng)
        if m.state_count == 0:
            continue
        ms = matrices_of_nfa(m)
        assert parse_matrixset(serialize_matrixset(ms)) == ms


def run(tmp_path, *argv, files=()):
    paths = []
    for i, content in enumerate(files):
        p = tmp_path / f"in{i}.txt"
        p.write_text(content)
        paths.append(str(p))
    argv = [arg.format(*paths) for arg in argv]
    return run_cli(list(argv))


def test_cli_check_universal_and_not(tmp_path, capsys):
    full = serialize_automaton(Dfa(AB, 1, 0, frozenset((0,)), ((0, 0),)))
    assert run(tmp_path, "check", "--kind", "pref", "--input", "{0}", files=[full]) == 0
    assert capsys.readouterr().out.strip() == "UNIVERSAL"

    bstar = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((0,)), ((1, 0), (1, 1)))
    )
    code = run(
        tmp_path, "check", "--kind", "pref", "--input", "{0}", files=[bstar]
    )
    assert code == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "NOT UNIVERSAL"
    assert out[1] == "witness: a"


def test_cli_check_fact_witness_flag(tmp_path, capsys):
    trap = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((0,)), ((0, 1), (1, 1)))
    )
    assert run(tmp_path, "check", "--kind", "fact", "--input", "{0}", files=[trap]) == 1
    assert capsys.readouterr().out.splitlines() == ["NOT UNIVERSAL"]
    run(
        tmp_path,
        "check",
        "--kind",
        "fact",
        "--witness",
        "--input",
        "{0}",
        files=[trap],
    )
    out = capsys.readouterr().out.splitlines()
    assert out == ["NOT UNIVERSAL", "witness: b"]


def test_cli_empty_word_witness(tmp_path, capsys):
    nothing = serialize_automaton(Dfa(AB, 1, 0, frozenset(), ((0, 0),)))
    assert run(tmp_path, "check", "--kind", "suff", "--input", "{0}", files=[nothing]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out == ["NOT UNIVERSAL", "witness: (empty word)"]


def test_cli_sync_and_mortal(tmp_path, capsys):
    cerny = run_gen(tmp_path, "cerny", "4")
    assert run(tmp_path, "sync", "--input", "{0}", files=[cerny]) == 0
    assert capsys.readouterr().out.strip() == "SYNCHRONIZING"

    perm = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((0,)), ((1, 1), (0, 0)))
    )
    assert run(tmp_path, "sync", "--input", "{0}", files=[perm]) == 1
    assert capsys.readouterr().out.strip() == "NOT SYNCHRONIZING"

    nil = "dim 2\nmatrix a\n0 1\n0 0\n"
    assert (
        run(tmp_path, "mortal", "--witness", "--input", "{0}", files=[nil]) == 0
    )
    assert capsys.readouterr().out.splitlines() == ["MORTAL", "witness: a a"]


def run_gen(tmp_path, family, n):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert run_cli(["gen", "--family", family, "--n", n]) == 0
    return buf.getvalue()


def test_cli_gen_roundtrips_through_check(tmp_path, capsys):
    line = run_gen(tmp_path, "pref-line", "5")
    assert run(tmp_path, "check", "--kind", "pref", "--input", "{0}", files=[line]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "witness: a a a a"


def test_cli_finite_and_omega(tmp_path, capsys):
    words = "alphabet a b\na\nb a\nb b\n"
    assert run(tmp_path, "finite", "--kind", "pref", "--words", "{0}", files=[words]) == 0
    capsys.readouterr()
    assert run(tmp_path, "omega", "--side", "left", "--words", "{0}", files=[words]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "NOT UNIVERSAL"


def test_cli_gadget(tmp_path, capsys):
    even = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((0,)), ((1, 0), (0, 1)))
    )
    odd = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((1,)), ((1, 0), (0, 1)))
    )
    assert (
        run(
            tmp_path,
            "gadget",
            "--kind",
            "suffix",
            "--inputs",
            "{0},{1}",
            files=[even, odd],
        )
        == 0
    )
    gadget = capsys.readouterr().out
    assert run(tmp_path, "check", "--kind", "suff", "--input", "{0}", files=[gadget]) == 0


def test_cli_oracle(tmp_path, capsys):
    bstar = serialize_automaton(
        Dfa(AB, 2, 0, frozenset((0,)), ((1, 0), (1, 1)))
    )
    code = run(
        tmp_path,
        "oracle",
        "--kind",
        "pref",
        "--maxlen",
        "6",
        "--input",
        "{0}",
        files=[bstar],
    )
    assert code == 1
    assert capsys.readouterr().out.splitlines()[1] == "witness: a"


def test_cli_input_and_usage_errors(tmp_path, capsys):
    assert run(tmp_path, "check", "--kind", "pref", "--input", "/no/such") == 2
    assert "error:" in capsys.readouterr().err
    assert run_cli(["no-such-command"]) == 2
    assert run_cli([]) == 2
    assert (
        run(tmp_path, "check", "--kind", "pref", "--input", "{0}", files=["junk"])
        == 2
    )


def test_cli_budget_exhaustion_exit_code(tmp_path, capsys):
    cerny = run_gen(tmp_path, "cerny", "6")
    code = run(
        tmp_path,
        "sync",
        "--shortest",
        "--max-subsets",
        "2",
        "--input",
        "{0}",
        files=[cerny],
    )
    assert code == 3
    assert "budget" in capsys.readouterr().err

"""Line-based file formats for automata, word lists, and matrix sets.

All formats are UTF-8, one directive per line, `#` starts a comment.
Serialization is canonical, so identical values always produce identical
bytes and parse(serialize(x)) == x.  NFAs must be eps-free to serialize;
the formats carry no eps-edges by design.
"""

from __future__ import annotations

from .automata import Alphabet, Dfa, Machine, Nfa, Word
from .errors import InputError
from .finitesets import WordSet
from .reductions import Matrix, MatrixSet


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"bad {what}: {token!r}") from None


def parse_automaton(text: str) -> Machine:
    kind: str | None = None
    alphabet: Alphabet | None = None
    states: int | None = None
    initials: list[int] | None = None
    finals: list[int] | None = None
    trans: list[tuple[int, str, int]] = []
    for parts in _lines(text):
        key, rest = parts[0], parts[1:]
        if key == "type":
            if len(rest) != 1 or rest[0] not in ("dfa", "nfa"):
                raise InputError("type must be 'dfa' or 'nfa'")
            kind = rest[0]
        elif key == "alphabet":
            alphabet = Alphabet(tuple(rest))
        elif key == "states":
            if len(rest) != 1:
                raise InputError("states takes one count")
            states = _int(rest[0], "state count")
        elif key == "initial":
            initials = [_int(tok, "initial state") for tok in rest]
        elif key == "final":
            finals = [_int(tok, "final state") for tok in rest]
        elif key == "trans":
            if len(rest) != 3:
                raise InputError(f"trans needs 'from sym to': {parts}")
            trans.append((_int(rest[0], "state"), rest[1], _int(rest[2], "state")))
        else:
            raise InputError(f"unknown directive: {key!r}")
    if kind is None or alphabet is None or states is None:
        raise InputError("automaton file needs type, alphabet, and states")
    if initials is None or finals is None:
        raise InputError("automaton file needs initial and final lines")
    if kind == "dfa":
        if len(initials) != 1:
            raise InputError("a DFA has exactly one initial state")
        seen: dict[tuple[int, str], int] = {}
        for p, sym, q in trans:
            if (p, sym) in seen:
                raise InputError(f"duplicate DFA transition from {p} on {sym!r}")
            seen[(p, sym)] = q
        return Dfa.from_map(alphabet, states, initials[0], finals, seen)
    return Nfa.from_edges(alphabet, states, initials, finals, trans)


def serialize_automaton(m: Machine) -> str:
    out: list[str] = []
    if isinstance(m, Dfa):
        out.append("type dfa")
        out.append("alphabet " + " ".join(m.alphabet.symbols))
        out.append(f"states {m.state_count}")
        out.append(f"initial {m.start}")
        out.append(("final " + " ".join(map(str, sorted(m.finals)))).rstrip())
        for p in range(m.state_count):
            for a, sym in enumerate(m.alphabet.symbols):
                out.append(f"trans {p} {sym} {m.delta[p][a]}")
    else:
        if m.has_eps:
            raise InputError("cannot serialize an NFA with eps-edges")
        out.append("type nfa")
        out.append("alphabet " + " ".join(m.alphabet.symbols))
        out.append(f"states {m.state_count}")
        out.append(("initial " + " ".join(map(str, sorted(m.initials)))).rstrip())
        out.append(("final " + " ".join(map(str, sorted(m.finals)))).rstrip())
        for p in range(m.state_count):
            for a, sym in enumerate(m.alphabet.symbols):
                for q in sorted(m.moves[p][a]):
                    out.append(f"trans {p} {sym} {q}")
    return "\n".join(out) + "\n"


def parse_wordset(text: str) -> WordSet:
    lines = _lines(text)
    if not lines or lines[0][0] != "alphabet":
        raise InputError("word-list file must start with an alphabet line")
    alphabet = Alphabet(tuple(lines[0][1:]))
    words: list[Word] = []
    for parts in lines[1:]:
        if parts == ["eps"]:
            words.append(())
        else:
            words.append(tuple(parts))
    return WordSet.of(alphabet, words)


def serialize_wordset(s: WordSet) -> str:
    out = ["alphabet " + " ".join(s.alphabet.symbols)]
    for w in s.sorted_words():
        out.append(" ".join(w) if w else "eps")
    return "\n".join(out) + "\n"


def parse_matrixset(text: str) -> MatrixSet:
    lines = _lines(text)
    if not lines or lines[0][0] != "dim" or len(lines[0]) != 2:
        raise InputError("matrix file must start with 'dim N'")
    dim = _int(lines[0][1], "dimension")
    symbols: list[str] = []
    mats: list[Matrix] = []
    i = 1
    while i < len(lines):
        header = lines[i]
        if header[0] != "matrix" or len(header) != 2:
            raise InputError(f"expected 'matrix sym', got: {header}")
        sym = header[1]
        rows: list[tuple[int, ...]] = []
        for j in range(i + 1, i + 1 + dim):
            if j >= len(lines):
                raise InputError(f"matrix {sym!r} is missing rows")
            row = tuple(_int(tok, "matrix entry") for tok in lines[j])
            rows.append(row)
        symbols.append(sym)
        mats.append(tuple(rows))
        i += 1 + dim
    return MatrixSet(dim, tuple(symbols), tuple(mats))


def serialize_matrixset(ms: MatrixSet) -> str:
    out = [f"dim {ms.dim}"]
    for sym, mat in zip(ms.symbols, ms.mats):
        out.append(f"matrix {sym}")
        for row in mat:
            out.append(" ".join(map(str, row)))
    return "\n".join(out) + "\n"

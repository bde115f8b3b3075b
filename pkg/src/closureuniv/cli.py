"""Command-line front end.

Exit status: 0 universal/yes/mortal, 1 not, 2 input or usage error,
3 search budget exhausted.  The verdict goes on the first stdout line;
when a witness is known it follows as `witness: ...`.
"""

from __future__ import annotations

import argparse
import sys

from .automata import Decision, Dfa, SearchBudget, Word, nfa_of_dfa
from .closures import ClosureKind
from .deciders import closure_universal, nfa_universal
from .errors import InputError, ResourceError
from .finitesets import (
    OmegaSide,
    WordSet,
    fact_star_universal,
    omega_universal,
    pref_star_universal,
    suff_star_universal,
)
from .formats import (
    parse_automaton,
    parse_matrixset,
    parse_wordset,
    serialize_automaton,
    serialize_wordset,
)
from .oracle import EnumBound, universal_up_to
from .reductions import GadgetSpec, factor_gadget, is_mortal, suffix_gadget
from .sync import is_synchronizing, shortest_reset_word
from .witnesses import FamilyKind, gen_family, shortest_missing

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(max_subsets=args.max_subsets)


def _print_witness(witness: Word | None) -> None:
    if witness is None:
        return
    print("witness: " + (" ".join(witness) if witness else "(empty word)"))


def _verdict(decision: Decision, yes: str, no: str) -> int:
    if decision.universal:
        print(yes)
        return EXIT_YES
    print(no)
    _print_witness(decision.witness)
    return EXIT_NO


def _cmd_check(args: argparse.Namespace) -> int:
    machine = parse_automaton(_read(args.input))
    kind = ClosureKind(args.kind)
    budget = _budget(args)
    decision = closure_universal(machine, kind, budget)
    if not decision.universal and decision.witness is None and args.witness:
        decision = Decision(False, shortest_missing(machine, kind, budget))
    return _verdict(decision, "UNIVERSAL", "NOT UNIVERSAL")


def _cmd_nfa_universal(args: argparse.Namespace) -> int:
    machine = parse_automaton(_read(args.input))
    if isinstance(machine, Dfa):
        machine = nfa_of_dfa(machine)
    return _verdict(
        nfa_universal(machine, _budget(args)), "UNIVERSAL", "NOT UNIVERSAL"
    )


def _cmd_sync(args: argparse.Namespace) -> int:
    machine = parse_automaton(_read(args.input))
    if not isinstance(machine, Dfa):
        raise InputError("sync needs a complete DFA")
    if args.shortest:
        word = shortest_reset_word(machine, _budget(args))
        if word is None:
            print("NOT SYNCHRONIZING")
            return EXIT_NO
        print("SYNCHRONIZING")
        _print_witness(word)
        return EXIT_YES
    if is_synchronizing(machine):
        print("SYNCHRONIZING")
        return EXIT_YES
    print("NOT SYNCHRONIZING")
    return EXIT_NO


def _cmd_mortal(args: argparse.Namespace) -> int:
    ms = parse_matrixset(_read(args.input))
    decision = is_mortal(ms, _budget(args))
    if decision.universal:
        print("MORTAL")
        if args.witness:
            _print_witness(decision.witness)
        return EXIT_YES
    print("NOT MORTAL")
    return EXIT_NO


def _cmd_finite(args: argparse.Namespace) -> int:
    words = parse_wordset(_read(args.words))
    budget = _budget(args)
    if args.kind == "pref":
        decision = pref_star_universal(words)
    elif args.kind == "suff":
        decision = suff_star_universal(words)
    else:
        decision = fact_star_universal(words, budget)
    return _verdict(decision, "UNIVERSAL", "NOT UNIVERSAL")


def _cmd_omega(args: argparse.Namespace) -> int:
    words = parse_wordset(_read(args.words))
    decision = omega_universal(words, OmegaSide(args.side), _budget(args))
    return _verdict(decision, "UNIVERSAL", "NOT UNIVERSAL")


def _cmd_gen(args: argparse.Namespace) -> int:
    primes = None
    if args.primes:
        primes = [int(tok) for tok in args.primes.split(",")]
    made = gen_family(FamilyKind(args.family), n=args.n, primes=primes)
    if isinstance(made, WordSet):
        sys.stdout.write(serialize_wordset(made))
    else:
        sys.stdout.write(serialize_automaton(made))
    return EXIT_YES


def _cmd_gadget(args: argparse.Namespace) -> int:
    machines = []
    for path in args.inputs.split(","):
        machine = parse_automaton(_read(path))
        if not isinstance(machine, Dfa):
            raise InputError(f"gadget inputs must be complete DFAs: {path}")
        machines.append(machine)
    spec = GadgetSpec(tuple(machines))
    if args.kind == "suffix":
        sys.stdout.write(serialize_automaton(suffix_gadget(spec)))
    else:
        sys.stdout.write(serialize_automaton(factor_gadget(spec)))
    return EXIT_YES


def _cmd_oracle(args: argparse.Namespace) -> int:
    machine = parse_automaton(_read(args.input))
    pad = 2 * machine.state_count
    decision = universal_up_to(
        machine, ClosureKind(args.kind), EnumBound(args.maxlen), pad
    )
    return _verdict(decision, "UNIVERSAL", "NOT UNIVERSAL")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closureuniv",
        description="Universality of prefix/suffix/factor/subword closures "
        "of regular languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument(
            "--max-subsets",
            type=int,
            default=1 << 20,
            help="cap on search states for exponential procedures",
        )
        return p

    p = add("check", _cmd_check, help="closure universality of an automaton")
    p.add_argument("--kind", required=True, choices=["pref", "suff", "fact", "subw"])
    p.add_argument("--input", required=True)
    p.add_argument("--witness", action="store_true")

    p = add("nfa-universal", _cmd_nfa_universal, help="plain NFA universality")
    p.add_argument("--input", required=True)

    p = add("sync", _cmd_sync, help="synchronizing-word questions for a DFA")
    p.add_argument("--input", required=True)
    p.add_argument("--shortest", action="store_true")

    p = add("mortal", _cmd_mortal, help="Boolean matrix mortality")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", action="store_true")

    p = add("finite", _cmd_finite, help="closure universality of S*")
    p.add_argument("--kind", required=True, choices=["pref", "suff", "fact"])
    p.add_argument("--words", required=True)

    p = add("omega", _cmd_omega, help="infinite-word coverage of a word set")
    p.add_argument("--side", required=True, choices=["right", "left", "bi"])
    p.add_argument("--words", required=True)

    p = add("gen", _cmd_gen, help="generate a named extremal family member")
    p.add_argument(
        "--family",
        required=True,
        choices=[kind.value for kind in FamilyKind],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--primes")

    p = add("gadget", _cmd_gadget, help="build a reduction gadget from DFAs")
    p.add_argument("--kind", required=True, choices=["suffix", "factor"])
    p.add_argument("--inputs", required=True)

    p = add("oracle", _cmd_oracle, help="brute-force universality up to a length")
    p.add_argument("--kind", required=True, choices=["pref", "suff", "fact", "subw"])
    p.add_argument("--input", required=True)
    p.add_argument("--maxlen", type=int, required=True)

    return parser


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))

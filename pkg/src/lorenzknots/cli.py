"""Command-line interface: ``lorenzknots <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .braid import alexander_polynomial, lorenz_braid
from .errors import BoundTooLarge, InvalidWord, UnknownFormat
from .grid import alexander_direct, alexander_parts, build_grid, export
from .harness import enumerate_words, verify_corpus, verify_word
from .invariants import closed_form_invariants
from .unknotting import unknotting_set
from .words import orbit_combinatorics, parse_word


def _half(x: Fraction) -> dict:
    """Half-integers as ``{num, den: 2}``."""
    return {"num": int(x * 2), "den": 2}


def analyze(text: str) -> dict:
    w = parse_word(text)
    oc = orbit_combinatorics(w)
    rec = closed_form_invariants(oc)
    g = build_grid(oc)
    parts = alexander_parts(g)
    return {
        "word": text.strip().lower(),
        "canonical": w.letters,
        "a": oc.a,
        "b": oc.b,
        "t": oc.t,
        "alpha": list(oc.alpha),
        "beta": list(oc.beta),
        "mu": list(oc.mu),
        "nu": list(oc.nu),
        "grid_number": rec.grid_number,
        "crossings": {
            "A": rec.crossings_A,
            "B": rec.crossings_B,
            "C": rec.crossings_C,
            "total": rec.crossings_total,
        },
        "unknotting": rec.unknotting,
        "alexander_x_minus": alexander_direct(g),
        "J_OO": _half(parts["J_OO"]),
        "J_XX": _half(parts["J_XX"]),
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def cmd_analyze(args):
    d = analyze(args.word)
    if args.json:
        print(_dump(d))
        return 0
    print(f"word        {d['canonical']}")
    print(f"a, b, t     {d['a']}, {d['b']}, {d['t']}")
    print(f"syllables   {list(zip(d['alpha'], d['beta']))}")
    print(f"mu, nu      {tuple(d['mu'])}, {tuple(d['nu'])}")
    print(f"grid number {d['grid_number']}")
    c = d["crossings"]
    print(f"crossings   {c['total']} (A {c['A']}, B {c['B']}, C {c['C']})")
    print(f"A(x-)       {d['alexander_x_minus']}")
    print(f"unknotting  {d['unknotting']}")
    return 0


def cmd_grid(args):
    g = build_grid(orbit_combinatorics(parse_word(args.word)))
    sys.stdout.write(export(g, args.format))
    return 0


def cmd_unknot(args):
    g = build_grid(orbit_combinatorics(parse_word(args.word)))
    rep = unknotting_set(g)
    if args.json:
        print(_dump(rep.to_dict()))
        return 0
    print(f"U = {rep.U}  (u_AC {rep.u_AC}, u_BC {rep.u_BC}, N_A {rep.N_A}, N_B {rep.N_B})")
    for c in rep.changes:
        d = c.to_dict()
        print(f"change row {d['row']} col {d['col']} region {d['region']} strings {tuple(d['strings'])}")
    return 0


def cmd_braid(args):
    br = lorenz_braid(orbit_combinatorics(parse_word(args.word)))
    print(f"strands {br.strands}")
    print(f"crossings {br.k}")
    print(f"word {br.word_str()}")
    if args.alexander:
        print(f"alexander {alexander_polynomial(br).sparse()}")
    return 0


def cmd_enumerate(args):
    for w in enumerate_words(args.max_len, include_t1=args.include_t1):
        print(w.letters)
    return 0


def cmd_verify(args):
    if args.word is not None:
        rep = verify_word(args.word)
        print(_dump(rep.to_dict()))
        return 0 if rep.ok else 2
    if args.max_len is None:
        print("verify: give a word or --max-len", file=sys.stderr)
        return 1
    summary = verify_corpus(args.max_len, jobs=args.jobs)
    print(_dump(summary))
    return 0 if summary["pass"] else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lorenzknots", description="Unknotting numbers of Lorenz knots.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="branch-line data and closed-form invariants")
    s.add_argument("word")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("grid", help="print the grid diagram")
    s.add_argument("word")
    s.add_argument("--format", default="ascii", choices=["ascii", "svg", "json"])
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("unknot", help="crossing changes to a descending diagram")
    s.add_argument("word")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_unknot)

    s = sub.add_parser("braid", help="Lorenz braid word")
    s.add_argument("word")
    s.add_argument("--alexander", action="store_true")
    s.set_defaults(func=cmd_braid)

    s = sub.add_parser("enumerate", help="list canonical words")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--include-t1", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="cross-check one word or every word up to a length")
    s.add_argument("word", nargs="?")
    s.add_argument("--max-len", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidWord, BoundTooLarge, UnknownFormat) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

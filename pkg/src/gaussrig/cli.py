"""Command-line front end.

Exit codes: 0 affirmative, 1 negative, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import derivation, motzkin, rewrite
from .polynomial import NatPoly, PolyParseError, parse
from .quotient import canon, decide_equal


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _poly(text: str) -> NatPoly:
    try:
        return parse(text)
    except PolyParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nat(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="gaussrig", description="Equality and derivations in N[x]/(x ~ 1 + x + x^2).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("decide", help="decide equality of two polynomials")
    c.add_argument("p", type=_poly)
    c.add_argument("q", type=_poly)

    c = sub.add_parser("normalize", help="rewrite to normal form")
    c.add_argument("p", type=_poly)
    c.add_argument("--trace", action="store_true", help="print every rule application")

    c = sub.add_parser("canon", help="print the class as nat:<n> or gauss:<m>+<n>i")
    c.add_argument("p", type=_poly)

    c = sub.add_parser("derive", help="emit a derivation file for p ~ q")
    c.add_argument("p", type=_poly)
    c.add_argument("q", type=_poly)
    c.add_argument("--bfs", type=_nat, metavar="BUDGET", help="shortest derivation by search")
    c.add_argument("-o", "--output", help="write to this file instead of stdout")

    c = sub.add_parser("check", help="validate a derivation file")
    c.add_argument("file")

    c = sub.add_parser("synth", help="compile derive(p, q) to a bijection and verify it")
    c.add_argument("p", type=_poly)
    c.add_argument("q", type=_poly)
    c.add_argument("--verify-size", type=_nat, required=True, metavar="N")

    c = sub.add_parser("enum-motzkin", help="list Motzkin trees by size")
    c.add_argument("n", type=_nat)
    c.add_argument("--count-only", action="store_true")

    c = sub.add_parser("critical-pairs", help="list overlaps and their joinability")
    c.add_argument("--max-degree", type=_nat, required=True)
    return ap


def _decide(args) -> int:
    equal = decide_equal(args.p, args.q)
    print("equal" if equal else "not-equal")
    return 0 if equal else 1


def _normalize(args) -> int:
    if args.trace:
        nf, lines = rewrite.normalize_traced(args.p)
        for line in lines:
            print(line)
    else:
        nf = rewrite.normalize(args.p)
    print(nf)
    return 0


def _canon(args) -> int:
    print(canon(args.p))
    return 0


def _derive(args) -> int:
    if args.bfs is not None:
        d = derivation.derive_bfs(args.p, args.q, args.bfs)
        if d is None:
            reason = "not-equal" if not decide_equal(args.p, args.q) else "not-found"
            print(reason, file=sys.stderr)
            return 1
    else:
        try:
            d = derivation.derive(args.p, args.q)
        except derivation.NotEqual as exc:
            print(f"not-equal: {exc}", file=sys.stderr)
            return 1
    text = d.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _check(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            d = derivation.Derivation.from_json(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        derivation.check(d)
    except derivation.DerivationError as exc:
        where = "end" if exc.index is None else str(exc.index)
        print(f"failed at step {where}: {exc}")
        return 1
    print("ok")
    return 0


def _synth(args) -> int:
    try:
        d = derivation.derive(args.p, args.q)
    except derivation.NotEqual as exc:
        print(f"not-equal: {exc}", file=sys.stderr)
        return 1
    bij = motzkin.compile(d)
    try:
        n_src, n_dst = motzkin.verify_round_trip(bij, args.verify_size)
    except AssertionError as exc:
        print(f"verification failed: {exc}")
        return 1
    print(f"derivation steps: {len(d)}")
    print(f"source values checked: {n_src}")
    print(f"target values checked: {n_dst}")
    return 0


def _enum(args) -> int:
    for n in range(args.n + 1):
        trees = motzkin.trees_of_size(n)
        if args.count_only:
            print(f"{n} {len(trees)}")
        else:
            for t in trees:
                print(f"{n} {t}")
    return 0


def _critical_pairs(args) -> int:
    if args.max_degree < 4:
        print("error: --max-degree must be at least 4", file=sys.stderr)
        return 2
    pairs = rewrite.critical_pairs(args.max_degree)
    for peak, left, right, joinable in pairs:
        verdict = "joinable" if joinable else "NOT-JOINABLE"
        print(f"{peak}  =>  {left}  |  {right}  {verdict}")
    return 0 if all(j for *_, j in pairs) else 1


COMMANDS = {
    "decide": _decide,
    "normalize": _normalize,
    "canon": _canon,
    "derive": _derive,
    "check": _check,
    "synth": _synth,
    "enum-motzkin": _enum,
    "critical-pairs": _critical_pairs,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


def main(argv: Optional[Sequence[str]] = None) -> None:
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)

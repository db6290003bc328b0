"""Command line interface: ``braidforge {normalize,apply,verify,parse}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import automorphisms as am
from .abelian import abelianize
from .braids import BraidWord, artin_action, project_to_permutation
from .combing import ResourceBudgetExceeded, comb
from .suites import SUITES, Options, run_suite, summarize
from .words import IDENTITY, Alphabet, Word, WordError, full_twist_pure, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_RANGE = (3, 6)


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4"`` or ``"3..6"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--n expects INT or A..B, got {text!r}") from None
    if lo < 2 or hi < lo:
        raise UsageError(f"invalid strand range {text!r}")
    return list(range(lo, hi + 1))


def _single_n(args, default: int = 4) -> int:
    if args.n is None:
        return default
    ns = parse_range(args.n)
    if len(ns) != 1:
        raise UsageError("this command takes a single strand count")
    return ns[0]


def _alphabet(group: str, n: int) -> Alphabet:
    if group == "B":
        return Alphabet.braid(n)
    if group == "P":
        return Alphabet.pure(n)
    return am.FREE_F2


def _z_power(k: int) -> str:
    return "z" if k == 1 else f"z^{k}"


def split_center(w: Word, n: int, budget: Optional[int] = None) -> tuple[Word, int]:
    """Write ``w = r z_n^k`` with the combed ``r`` as short as possible.

    The exponent is searched among the abelianized exponents of ``w`` and 0;
    ties go to the smaller ``|k|``.
    """
    candidates = sorted(set(abelianize(w, n).entries) | {0}, key=lambda k: (abs(k), k))
    best = None
    for k in candidates:
        rest = comb(w * full_twist_pure(n) ** -k, n, budget)
        key = rest.syllable_count() + (k != 0)
        if best is None or key < best[0]:
            best = (key, rest.to_word(), k)
    return best[1], best[2]


def format_with_center(w: Word, n: int, budget: Optional[int] = None) -> str:
    if n < 3:
        return str(w) if not w.is_identity() else "1"
    rest, k = split_center(w, n, budget)
    parts = ([] if rest.is_identity() else [str(rest)]) + ([_z_power(k)] if k else [])
    return " ".join(parts) or "1"


# -- commands -------------------------------------------------------------------

def cmd_normalize(args) -> int:
    n = _single_n(args)
    w = parse_word(args.word, _alphabet(args.group, n))
    if args.group == "P":
        c = comb(w, n, args.budget)
        if args.format == "json":
            print(json.dumps({"n": n, "components": {f"u{k}": str(c.component(k)) for k in range(n, 1, -1)},
                              "word": str(c.to_word())}))
        else:
            print(c)
        return EXIT_OK
    if args.group == "B":
        b = BraidWord(n, w)
        perm = project_to_permutation(b)
        images = artin_action(b).images
        if args.format == "json":
            print(json.dumps({"n": n, "word": str(w), "permutation": list(perm.images),
                              "artin": [str(img) for img in images]}))
        else:
            print(f"word = {w or '1'}")
            print(f"permutation = {perm}")
            for k, img in enumerate(images, 1):
                print(f"x{k} -> {img or '1'}")
        return EXIT_OK
    print(str(w) or "1")
    return EXIT_OK


def cmd_apply(args) -> int:
    n = _single_n(args)
    if not args.auto:
        raise UsageError("apply needs --auto EXPR")
    f = am.evaluate(args.auto, n, args.group, args.budget)
    w = parse_word(args.word, _alphabet(args.group, n))
    img = f(w)
    if args.group == "P":
        out = format_with_center(img, n, args.budget)
    else:
        out = str(img) or "1"
    if args.format == "json":
        print(json.dumps({"n": n, "auto": str(f.name), "word": str(w), "image": out}))
    else:
        print(out)
    return EXIT_OK


def cmd_parse(args) -> int:
    n = _single_n(args)
    if args.auto:
        expr = am.parse_auto_expr(args.text)
        out = {"expression": str(expr)}
    else:
        w = parse_word(args.text, _alphabet(args.group, n))
        out = {"word": str(w) or "1", "syllables": [[str(s), e] for s, e in w.syllables]}
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(out.get("expression", out.get("word")))
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = parse_range(args.n) if args.n else list(range(DEFAULT_RANGE[0], DEFAULT_RANGE[1] + 1))
    options = Options(radius=args.radius, budget=args.budget, seed=args.seed)
    records = run_suite(args.suite, ns, options, args.jobs)
    summary = summarize(records)
    if args.format == "json":
        print(json.dumps({"claims": [r.to_json() for r in records], "summary": summary}, indent=2))
    else:
        for r in records:
            line = f"{r.status.upper():7s} {r.claim_id:28s} n={r.n}  {r.elapsed:9.1f} ms"
            print(line + (f"  {r.witness}" if r.witness else ""))
        print(f"pass {summary['pass']}  fail {summary['fail']}  skipped {summary['skipped']}")
    return EXIT_FAIL if summary["fail"] else EXIT_OK


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", help="strand count INT or range A..B")
    common.add_argument("--group", choices=("B", "P", "F2"), default="P")
    common.add_argument("--budget", type=int, default=None,
                        help="maximum intermediate word length (default: $BRAIDFORGE_BUDGET or built-in)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="braidforge", description="Braid and pure braid group computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="combed normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("apply", parents=[common], help="apply an automorphism expression to a word")
    p.add_argument("--auto", required=True, help='expression such as "t ; eps" or "(s1 s2)^3"')
    p.add_argument("word")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", parents=[common], help="run a suite of registered claims")
    p.add_argument("--suite", choices=SUITES, default="paper")
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("parse", parents=[common], help="parse and reprint a word or expression")
    p.add_argument("--auto", action="store_true", help="parse an automorphism expression")
    p.add_argument("text")
    p.set_defaults(func=cmd_parse)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None and os.environ.get("BRAIDFORGE_BUDGET"):
        args.budget = int(os.environ["BRAIDFORGE_BUDGET"])
    try:
        return args.func(args)
    except ResourceBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, WordError, am.AutomorphismError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Words are given over the alphabet a, b, A, B (uppercase = inverse) and
are treated as conjugacy classes: every command reduces its input
cyclically, except ``reduce --linear``.  Exit codes: 0 success or true
verdict, 1 false verdict or failed verification, 2 usage error, 3
resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    DESK_GUARD,
    ResourceGuardError,
    census_records,
    enumerate_root_words,
    run_verification,
)
from .minimality import is_minimal, is_root
from .search import MemberLimitExceeded, minimal_class, minimize, are_equivalent
from .words import CyclicWord, ParseError, parse_word, profile


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootwords",
        description="Minimal and root words in the free group on two generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON output")
        return p

    p = command("reduce", "print the canonical cyclic form of a word")
    p.add_argument("word")
    p.add_argument(
        "--linear",
        action="store_true",
        help="free reduction only, keeping the word linear",
    )
    p.set_defaults(func=_cmd_reduce)

    p = command("minimize", "shorten a word to a minimal representative")
    p.add_argument("word")
    p.set_defaults(func=_cmd_minimize)

    p = command("is-minimal", "test minimality and print the inequality values")
    p.add_argument("word")
    p.set_defaults(func=_cmd_is_minimal)

    p = command("is-root", "test root-ness and print the equality values")
    p.add_argument("word")
    p.set_defaults(func=_cmd_is_root)

    p = command("equivalent", "test whether two words are automorphic images")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=_cmd_equivalent)

    p = command("class", "print the minimal equivalence class of a word as JSON")
    p.add_argument("word")
    p.set_defaults(func=_cmd_class)

    p = command("roots", "stream root words up to a length as JSONL")
    p.add_argument("--max-len", type=_positive, default=12)
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=_cmd_roots)

    p = command("census", "stream per-length census records as JSONL")
    p.add_argument("--max-len", type=_positive, default=12)
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=_cmd_census)

    p = command("verify", "run the theorem verification suites")
    p.add_argument("--max-len", type=_positive, default=10)
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def _cmd_reduce(args) -> int:
    if args.linear:
        word = parse_word(args.word)
    else:
        word = CyclicWord.parse(args.word)
    if args.json:
        print(
            json.dumps(
                {
                    "input": args.word,
                    "reduced": str(word),
                    "length": len(word),
                    "cyclic": not args.linear,
                }
            )
        )
    else:
        print(str(word))
    return 0


def _cmd_minimize(args) -> int:
    start = CyclicWord.parse(args.word)
    minimal, trace = minimize(start)
    if args.json:
        print(
            json.dumps(
                {
                    "input": args.word,
                    "minimal": str(minimal),
                    "length": len(minimal),
                    "trace": [
                        {"automorphism": s.token(), "word": str(w), "length": len(w)}
                        for s, w in trace
                    ],
                }
            )
        )
    else:
        print(str(minimal))
        for s, w in trace:
            print(f"{s.token()} -> {w} (len {len(w)})")
    return 0


def _cmd_is_minimal(args) -> int:
    w = CyclicWord.parse(args.word)
    verdict = is_minimal(w)
    if len(w) == 0:
        if args.json:
            print(
                json.dumps(
                    {
                        "word": "",
                        "minimal": verdict,
                        "imbalance": None,
                        "aa": None,
                        "bb": None,
                    }
                )
            )
        else:
            print("true")
            print("(the empty word is minimal by convention)")
        return 0
    p = profile(w)
    if args.json:
        print(
            json.dumps(
                {
                    "word": str(w),
                    "minimal": verdict,
                    "imbalance": p.imbalance,
                    "aa": p.n_aa,
                    "bb": p.n_bb,
                }
            )
        )
    else:
        print("true" if verdict else "false")
        print(f"|(ab)_w - (aB)_w| = {p.imbalance}")
        print(f"min((aa)_w, (bb)_w) = {min(p.n_aa, p.n_bb)}")
    return 0 if verdict else 1


def _cmd_is_root(args) -> int:
    w = CyclicWord.parse(args.word)
    verdict = is_root(w)
    if len(w) == 0:
        if args.json:
            print(
                json.dumps(
                    {
                        "word": "",
                        "root": verdict,
                        "imbalance": None,
                        "aa": None,
                        "bb": None,
                    }
                )
            )
        else:
            print("false")
            print("(the empty word is not a root by convention)")
        return 1
    p = profile(w)
    if args.json:
        print(
            json.dumps(
                {
                    "word": str(w),
                    "root": verdict,
                    "imbalance": p.imbalance,
                    "aa": p.n_aa,
                    "bb": p.n_bb,
                }
            )
        )
    else:
        print("true" if verdict else "false")
        print(f"|(ab)_w - (aB)_w| = {p.imbalance}")
        print(f"(aa)_w = {p.n_aa}")
        print(f"(bb)_w = {p.n_bb}")
    return 0 if verdict else 1


def _cmd_equivalent(args) -> int:
    u = CyclicWord.parse(args.u)
    v = CyclicWord.parse(args.v)
    mu, _ = minimize(u)
    mv, _ = minimize(v)
    verdict = are_equivalent(mu, mv)
    if args.json:
        print(
            json.dumps(
                {
                    "u": args.u,
                    "v": args.v,
                    "equivalent": verdict,
                    "minimal_u": str(mu),
                    "minimal_v": str(mv),
                }
            )
        )
    else:
        print("true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_class(args) -> int:
    cls = minimal_class(CyclicWord.parse(args.word))
    print(
        json.dumps(
            {
                "length": cls.length,
                "is_root_class": cls.is_root_class,
                "members": [str(m) for m in cls.sorted_members()],
            }
        )
    )
    return 0


def _cmd_roots(args) -> int:
    for length, roots in enumerate_root_words(args.max_len, threads=args.threads):
        for w in sorted(roots):
            print(json.dumps({"len": length, "word": str(w)}))
    return 0


def _cmd_census(args) -> int:
    for record in census_records(args.max_len, threads=args.threads):
        print(json.dumps(record.to_json_dict()))
    return 0


def _cmd_verify(args) -> int:
    report = run_verification(args.max_len, threads=args.threads)
    print(json.dumps(report, indent=2))
    if not report["passed"]:
        return 1
    if not report["complete"]:
        return 3
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ResourceGuardError, MemberLimitExceeded) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

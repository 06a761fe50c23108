"""
Command-line front end.

Results go to stdout, diagnostics and timing to stderr.  For a fixed format
the stdout bytes are a pure function of argv and the two environment
variables (REDWORD_MAX_WORDS, REDWORD_THREADS), so runs are diffable.

Exit codes: 0 success, 1 verification found violations, 2 usage or parse
error, 3 enumeration cap or sweep bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from redword.classes import (
    DEFAULT_MAX_WORDS,
    class_partition,
    count_reduced_words,
    enumerate_reduced_words,
)
from redword.errors import EnumerationCapExceeded, SweepBoundExceeded
from redword.perm import Permutation
from redword.singleton import (
    SINGLETON_SWEEP_BOUND,
    check_zigzag_lemma,
    long_element_class,
    long_element_singleton,
    search_by_class_count,
    singleton_words,
    verify_theorem_sweep,
    verify_zigzag_sweep,
)
from redword.words import Word


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: a digit string for degree <= 9, else
    comma-separated values.

    >>> parse_permutation("2341").entries
    (2, 3, 4, 1)
    >>> parse_permutation("7,2,6,5,4,1,3").to_text()
    '7265413'
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        entries = []
        for position, piece in enumerate(text.split(","), start=1):
            piece = piece.strip()
            if not piece.lstrip("-").isdigit():
                raise ValueError(f"invalid entry {piece!r} at position {position}")
            entries.append(int(piece))
    else:
        for position, ch in enumerate(text, start=1):
            if not ch.isdigit():
                raise ValueError(f"invalid entry {ch!r} at position {position}")
        entries = [int(ch) for ch in text]
    return Permutation(tuple(entries))


def parse_word(text: str, n: int) -> Word:
    """Parse a word in ambient degree ``n``; see Word.from_text."""
    return Word.from_text(text, n)


def _perm_payload(p: Permutation) -> dict:
    payload: dict = {"entries": list(p.entries)}
    if p.degree <= 9:
        payload["compact"] = p.to_text()
    return payload


def _word_payload(w: Word) -> dict:
    payload: dict = {"letters": list(w.letters)}
    if w.degree <= 10:
        payload["compact"] = w.to_text()
    return payload


def _resolve_max_words(args) -> int:
    if args.max_words is not None:
        if args.max_words < 1:
            raise ValueError(f"--max-words must be positive, got {args.max_words}")
        return args.max_words
    raw = os.environ.get("REDWORD_MAX_WORDS")
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"REDWORD_MAX_WORDS is not an integer: {raw!r}")
        if cap < 1:
            raise ValueError(f"REDWORD_MAX_WORDS must be positive, got {cap}")
        return cap
    return DEFAULT_MAX_WORDS


def _resolve_threads(args) -> int | None:
    if args.threads is not None:
        return args.threads
    raw = os.environ.get("REDWORD_THREADS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"REDWORD_THREADS is not an integer: {raw!r}")
    return None


def _cmd_eval(args):
    word = parse_word(args.word, args.n)
    p = word.evaluate()
    inputs = {"n": args.n, "word": args.word}
    results = {"permutation": _perm_payload(p)}
    return inputs, results, [p.to_text()], 0


def _cmd_reduced_words(args):
    p = parse_permutation(args.permutation)
    cap = _resolve_max_words(args)
    inputs = {
        "permutation": p.to_text(),
        "count_only": bool(args.count_only),
        "max_words": cap,
    }
    if args.count_only:
        count = count_reduced_words(p)
        return inputs, {"count": count}, [str(count)], 0
    words = list(enumerate_reduced_words(p, cap))
    results = {"count": len(words), "words": [_word_payload(w) for w in words]}
    return inputs, results, [w.to_text() for w in words], 0


def _cmd_classes(args):
    p = parse_permutation(args.permutation)
    cap = _resolve_max_words(args)
    inputs = {"permutation": p.to_text(), "max_words": cap}
    partition = class_partition(p, cap)
    classes_payload = []
    lines = [f"{len(partition.classes)} classes, {partition.total_words} words"]
    for cls in partition.classes:
        members = sorted(cls.members)
        classes_payload.append(
            {
                "representative": _word_payload(cls.representative),
                "size": len(members),
                "members": [_word_payload(m) for m in members],
            }
        )
        lines.append(" ".join(m.to_text() for m in members))
    results = {
        "class_count": len(partition.classes),
        "total_words": partition.total_words,
        "classes": classes_payload,
    }
    return inputs, results, lines, 0


def _cmd_singletons(args):
    p = parse_permutation(args.permutation)
    inputs = {"permutation": p.to_text()}
    words = singleton_words(p)
    results = {"count": len(words), "words": [_word_payload(w) for w in words]}
    return inputs, results, [w.to_text() for w in words], 0


def _cmd_longest(args):
    n = args.n
    word = long_element_singleton(n)
    symmetries = sorted(long_element_class(n))
    inputs = {"degree": n}
    results = {
        "degree": n,
        "word": _word_payload(word),
        "symmetries": [_word_payload(w) for w in symmetries],
    }
    lines = [word.to_text()] + [w.to_text() for w in symmetries]
    return inputs, results, lines, 0


def _cmd_verify(args):
    threads = _resolve_threads(args)
    inputs = {
        "max_n": args.max_n,
        "sweep_bound": args.sweep_bound,
        "threads": args.threads,
    }
    report = verify_theorem_sweep(args.max_n, args.sweep_bound, threads)
    zigzag = verify_zigzag_sweep(args.max_n)
    violations = list(report.violations) + list(zigzag.violations)
    lines = [
        f"checked {report.words_checked} singleton words up to degree"
        f" {report.max_degree} ({report.degenerate_words} degenerate skipped,"
        f" {report.checks_run} checks)",
        f"checked {zigzag.cases_checked} zigzag cases up to degree"
        f" {zigzag.max_degree}",
    ]
    for v in violations:
        lines.append(f"violation {v.check} on {v.subject}: {v.detail}")
    lines.append(f"{len(violations)} violations")
    results = {
        "max_degree": args.max_n,
        "singleton_words_checked": report.words_checked,
        "degenerate_words": report.degenerate_words,
        "checks_run": report.checks_run,
        "zigzag_cases_checked": zigzag.cases_checked,
        "violation_count": len(violations),
        "violations": [
            {"check": v.check, "subject": v.subject, "detail": v.detail}
            for v in violations
        ],
    }
    return inputs, results, lines, 0 if not violations else 1


def _cmd_search(args):
    threads = _resolve_threads(args)
    inputs = {
        "n": args.n,
        "class_count": args.class_count,
        "sweep_bound": args.sweep_bound,
        "threads": args.threads,
    }
    result = search_by_class_count(args.n, args.class_count, args.sweep_bound, threads)
    lines = [f"{len(result.matches)} matches"]
    matches_payload = []
    for p, words in result.matches:
        matches_payload.append(
            {
                "permutation": _perm_payload(p),
                "words": [_word_payload(w) for w in words],
            }
        )
        joined = " ".join(w.to_text() for w in words)
        lines.append(f"{p.to_text()}: {joined}" if joined else f"{p.to_text()}:")
    results = {
        "degree": result.degree,
        "target_count": result.target_count,
        "matches": matches_payload,
    }
    return inputs, results, lines, 0


def _cmd_zigzag(args):
    check = check_zigzag_lemma(args.i, args.j, args.n)
    inputs = {"i": args.i, "j": args.j, "n": args.n}
    results = {
        "word": _word_payload(check.word),
        "reduced": check.reduced,
        "evaluated_length": check.evaluated_length,
        "permutation": _perm_payload(check.permutation),
        "window_matches": check.window_matches,
    }
    lines = [
        f"word {check.word.to_text()}",
        f"reduced {str(check.reduced).lower()}",
        f"evaluated-length {check.evaluated_length}",
        f"permutation {check.permutation.to_text()}",
        f"window-matches {str(check.window_matches).lower()}",
    ]
    return inputs, results, lines, 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json"], default="text",
        help="output format (default text)",
    )

    parser = argparse.ArgumentParser(
        prog="redword",
        description="Reduced words of permutations and their commutation classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval", parents=[common], help="evaluate a word to a permutation"
    )
    p_eval.add_argument("--n", type=int, required=True, help="ambient degree")
    p_eval.add_argument("word", help="letter string, e.g. 123 or 1,2,3")
    p_eval.set_defaults(func=_cmd_eval)

    p_rw = sub.add_parser(
        "reduced-words", parents=[common],
        help="enumerate or count all reduced words of a permutation",
    )
    p_rw.add_argument("permutation", help="one-line notation, e.g. 2341")
    p_rw.add_argument("--count-only", action="store_true",
                      help="print only the count")
    p_rw.add_argument("--max-words", type=int, default=None,
                      help=f"enumeration cap (default {DEFAULT_MAX_WORDS})")
    p_rw.set_defaults(func=_cmd_reduced_words)

    p_cl = sub.add_parser(
        "classes", parents=[common],
        help="partition the reduced words into commutation classes",
    )
    p_cl.add_argument("permutation")
    p_cl.add_argument("--max-words", type=int, default=None)
    p_cl.set_defaults(func=_cmd_classes)

    p_si = sub.add_parser(
        "singletons", parents=[common],
        help="reduced words that are their own commutation class",
    )
    p_si.add_argument("permutation")
    p_si.set_defaults(func=_cmd_singletons)

    p_lo = sub.add_parser(
        "longest", parents=[common],
        help="the block word of the order-reversing permutation, with symmetries",
    )
    p_lo.add_argument("n", type=int, help="degree, at least 2")
    p_lo.set_defaults(func=_cmd_longest)

    p_ve = sub.add_parser(
        "verify", parents=[common],
        help="exhaustively check the structural laws of singleton words",
    )
    p_ve.add_argument("--max-n", type=int, required=True)
    p_ve.add_argument("--sweep-bound", type=int, default=SINGLETON_SWEEP_BOUND)
    p_ve.add_argument("--threads", type=int, default=None)
    p_ve.set_defaults(func=_cmd_verify)

    p_se = sub.add_parser(
        "search", parents=[common],
        help="permutations with a given singleton-word count",
    )
    p_se.add_argument("--n", type=int, required=True)
    p_se.add_argument("--class-count", type=int, required=True)
    p_se.add_argument("--sweep-bound", type=int, default=SINGLETON_SWEEP_BOUND)
    p_se.add_argument("--threads", type=int, default=None)
    p_se.set_defaults(func=_cmd_search)

    p_zz = sub.add_parser(
        "zigzag", parents=[common],
        help="build and inspect the ascending-descending-ascending word",
    )
    p_zz.add_argument("--i", type=int, required=True)
    p_zz.add_argument("--j", type=int, required=True)
    p_zz.add_argument("--n", type=int, required=True)
    p_zz.set_defaults(func=_cmd_zigzag)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    start = time.perf_counter()
    try:
        inputs, results, lines, code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SweepBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.format == "json":
        document = {"command": args.command, "inputs": inputs, "results": results}
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    print(f"elapsed_ms {elapsed_ms:.3f}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

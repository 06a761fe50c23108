#!/usr/bin/env python3
"""Compare the pure-Python and compiled enumeration kernels.

Runs each workload on both backends (when the extension is built) and
prints a table of best-of-N wall times with the speedup ratio.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import redword._pure as pure

try:
    import redword._speedups as compiled
except ImportError:
    compiled = None

from redword.perm import all_permutations, longest_element

BIG = 10**9


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def workloads():
    w5 = longest_element(5).entries
    w6 = longest_element(6).entries
    w7 = longest_element(7).entries
    w8 = longest_element(8).entries
    s6 = [p.entries for p in all_permutations(6)]
    s7 = [p.entries for p in all_permutations(7)]

    def sweep(backend, perms):
        return sum(len(backend.singleton_word_list(e)) for e in perms)

    yield ("list reduced words, degree 5 (768)",
           lambda b: len(b.reduced_word_list(w5, BIG)))
    yield ("list reduced words, degree 6 (292864)",
           lambda b: len(b.reduced_word_list(w6, BIG)))
    yield ("count reduced words, degree 7",
           lambda b: b.reduced_word_count(w7))
    yield ("count reduced words, degree 8",
           lambda b: b.reduced_word_count(w8))
    yield ("singleton words across all of degree 6",
           lambda b: sweep(b, s6))
    yield ("singleton words across all of degree 7",
           lambda b: sweep(b, s7))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per workload (default 3)")
    args = parser.parse_args()

    name_width = 42
    print(f"{'workload':<{name_width}} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, make in workloads():
        pure_time, pure_result = bench(lambda: make(pure), args.repeat)
        if compiled is None:
            print(f"{name:<{name_width}} {pure_time * 1000:>8.1f}ms {'n/a':>10}")
            continue
        fast_time, fast_result = bench(lambda: make(compiled), args.repeat)
        if pure_result != fast_result:
            raise SystemExit(
                f"backend disagreement on {name!r}:"
                f" {pure_result} != {fast_result}"
            )
        ratio = pure_time / fast_time if fast_time > 0 else float("inf")
        print(
            f"{name:<{name_width}} {pure_time * 1000:>8.1f}ms"
            f" {fast_time * 1000:>8.1f}ms {ratio:>7.1f}x"
        )
    if compiled is None:
        print("extension not built; only the pure backend was timed")


if __name__ == "__main__":
    main()

"""
Pure-Python enumeration kernels.

These are the hot loops of the package: depth-first searches over the
letter-by-letter factorisations of a permutation.  A compiled twin lives in
``_speedups``; ``kernels`` picks whichever is available.  Both backends take
a plain entry tuple and return plain letter tuples, so they stay free of the
dataclass layer.

The search state is the inverse permutation stored as a 0-indexed position
array ``r`` with ``r[v-1]`` = position of the value v.  The letter i can
start a factorisation exactly when the values i and i+1 are out of order,
i.e. ``r[i-1] > r[i]``; consuming that letter swaps the two slots and drops
the inversion count by one.  Trying letters in ascending order makes the
output lexicographic.
"""

from __future__ import annotations

from redword.errors import EnumerationCapExceeded


def _positions(entries: tuple[int, ...]) -> list[int]:
    r = [0] * len(entries)
    for pos, v in enumerate(entries):
        r[v - 1] = pos
    return r


def _inversions(entries: tuple[int, ...]) -> int:
    n = len(entries)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if entries[a] > entries[b]
    )


def reduced_word_list(
    entries: tuple[int, ...], cap: int
) -> list[tuple[int, ...]]:
    """All reduced words of the permutation, in lexicographic order.

    Raises EnumerationCapExceeded once more than ``cap`` words exist.
    """
    n = len(entries)
    r = _positions(entries)
    total = _inversions(entries)
    out: list[tuple[int, ...]] = []
    word: list[int] = []

    def dfs() -> None:
        if len(word) == total:
            if len(out) >= cap:
                raise EnumerationCapExceeded(cap, len(out))
            out.append(tuple(word))
            return
        for i in range(1, n):
            if r[i - 1] > r[i]:
                r[i - 1], r[i] = r[i], r[i - 1]
                word.append(i)
                dfs()
                word.pop()
                r[i - 1], r[i] = r[i], r[i - 1]

    dfs()
    return out


def reduced_word_count(entries: tuple[int, ...]) -> int:
    """Number of reduced words, without materialising them."""
    memo: dict[tuple[int, ...], int] = {}

    def count(r: tuple[int, ...]) -> int:
        cached = memo.get(r)
        if cached is not None:
            return cached
        total = 0
        for i in range(1, len(r)):
            if r[i - 1] > r[i]:
                swapped = list(r)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                total += count(tuple(swapped))
        if total == 0:
            total = 1
        memo[r] = total
        return total

    return count(tuple(_positions(entries)))


def singleton_word_list(entries: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Reduced words whose adjacent letters always differ by exactly 1,
    in lexicographic order.

    Such a word admits no commutation move, so it is the sole member of its
    commutation class.  After the first letter the search only ever probes
    the two neighbouring letter values, which keeps the tree tiny.
    """
    n = len(entries)
    r = _positions(entries)
    total = _inversions(entries)
    out: list[tuple[int, ...]] = []
    word: list[int] = []

    def step(i: int) -> None:
        r[i - 1], r[i] = r[i], r[i - 1]
        word.append(i)
        dfs()
        word.pop()
        r[i - 1], r[i] = r[i], r[i - 1]

    def dfs() -> None:
        if len(word) == total:
            out.append(tuple(word))
            return
        if not word:
            for i in range(1, n):
                if r[i - 1] > r[i]:
                    step(i)
            return
        prev = word[-1]
        for i in (prev - 1, prev + 1):
            if 1 <= i <= n - 1 and r[i - 1] > r[i]:
                step(i)

    dfs()
    return out

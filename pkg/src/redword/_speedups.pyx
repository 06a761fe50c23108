# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""
Compiled enumeration kernels, mirroring ``_pure`` function for function.

The search state lives in C int arrays; only the emitted words and the
memo table are Python objects.  Counts are kept as Python ints because the
word counts of longest elements overflow 64 bits long before the recursion
becomes slow.
"""

from libc.stdlib cimport free, malloc

from redword import _pure
from redword.errors import EnumerationCapExceeded


cdef int* _positions(entries, int n) except NULL:
    cdef int* r = <int*> malloc(n * sizeof(int))
    if r == NULL:
        raise MemoryError()
    cdef int pos
    for pos in range(n):
        r[entries[pos] - 1] = pos
    return r


cdef int _inversions(int* r, int n):
    # r holds each value's position, so value pairs map to entry pairs
    cdef int a, b, total = 0
    for a in range(n):
        for b in range(a + 1, n):
            if r[a] > r[b]:
                total += 1
    return total


cdef int _dfs_all(
    int* r, int* word, int depth, int total, int n, list out, long cap
) except -1:
    cdef int i, tmp, k
    if depth == total:
        if len(out) >= cap:
            raise EnumerationCapExceeded(cap, len(out))
        out.append(tuple([word[k] for k in range(total)]))
        return 0
    for i in range(1, n):
        if r[i - 1] > r[i]:
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
            word[depth] = i
            _dfs_all(r, word, depth + 1, total, n, out, cap)
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
    return 0


def reduced_word_list(entries, cap):
    """All reduced words of the permutation, in lexicographic order.

    Raises EnumerationCapExceeded once more than ``cap`` words exist.
    """
    cdef int n = len(entries)
    cdef int* r = _positions(entries, n)
    cdef int total = _inversions(r, n)
    cdef int* word = <int*> malloc((total if total > 0 else 1) * sizeof(int))
    if word == NULL:
        free(r)
        raise MemoryError()
    out = []
    try:
        _dfs_all(r, word, 0, total, n, out, cap)
    finally:
        free(word)
        free(r)
    return out


cdef object _count(int* r, int n, dict memo):
    cdef int i, tmp, k
    key = bytes([r[k] for k in range(n)])
    cached = memo.get(key)
    if cached is not None:
        return cached
    total = 0
    for i in range(1, n):
        if r[i - 1] > r[i]:
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
            total = total + _count(r, n, memo)
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
    if total == 0:
        total = 1
    memo[key] = total
    return total


def reduced_word_count(entries):
    """Number of reduced words, without materialising them."""
    cdef int n = len(entries)
    if n > 255:
        # the memo packs positions into bytes, one per value
        return _pure.reduced_word_count(entries)
    cdef int* r = _positions(entries, n)
    try:
        return _count(r, n, {})
    finally:
        free(r)


cdef int _dfs_singleton(
    int* r, int* word, int depth, int total, int n, list out
) except -1:
    cdef int i, tmp, k, prev, probe
    if depth == total:
        out.append(tuple([word[k] for k in range(total)]))
        return 0
    if depth == 0:
        for i in range(1, n):
            if r[i - 1] > r[i]:
                tmp = r[i - 1]
                r[i - 1] = r[i]
                r[i] = tmp
                word[0] = i
                _dfs_singleton(r, word, 1, total, n, out)
                tmp = r[i - 1]
                r[i - 1] = r[i]
                r[i] = tmp
        return 0
    prev = word[depth - 1]
    for probe in range(2):
        i = prev - 1 if probe == 0 else prev + 1
        if 1 <= i <= n - 1 and r[i - 1] > r[i]:
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
            word[depth] = i
            _dfs_singleton(r, word, depth + 1, total, n, out)
            tmp = r[i - 1]
            r[i - 1] = r[i]
            r[i] = tmp
    return 0


def singleton_word_list(entries):
    """Reduced words whose adjacent letters always differ by exactly 1,
    in lexicographic order.
    """
    cdef int n = len(entries)
    cdef int* r = _positions(entries, n)
    cdef int total = _inversions(r, n)
    cdef int* word = <int*> malloc((total if total > 0 else 1) * sizeof(int))
    if word == NULL:
        free(r)
        raise MemoryError()
    out = []
    try:
        _dfs_singleton(r, word, 0, total, n, out)
    finally:
        free(word)
        free(r)
    return out

"""
Reduced-word enumeration and the commutation-class quotient.

Two reduced words are commutation equivalent when a sequence of swaps of
adjacent letters differing by at least 2 turns one into the other.  The
classes of that relation partition the reduced words of a permutation; this
module enumerates the words, builds the partition, and offers the
braid-move-augmented graph as a connectivity self-check (with both move
kinds, all reduced words of a permutation are connected).

Enumeration sizes explode factorially, so every full enumeration honours a
word cap and fails loudly instead of truncating.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterator

from redword import kernels
from redword.perm import Permutation
from redword.words import Word

DEFAULT_MAX_WORDS = 10_000_000


@dataclasses.dataclass(frozen=True)
class CommutationClass:
    """One commutation class: its members, canonical representative
    (lexicographically least member) and the permutation they evaluate to."""

    members: frozenset[Word]
    representative: Word
    permutation: Permutation

    def __len__(self) -> int:
        return len(self.members)

    def is_singleton(self) -> bool:
        return len(self.members) == 1


@dataclasses.dataclass(frozen=True)
class ClassPartition:
    """All commutation classes of one permutation, sorted by representative."""

    permutation: Permutation
    classes: tuple[CommutationClass, ...]
    total_words: int

    def singleton_representatives(self) -> list[Word]:
        return [c.representative for c in self.classes if c.is_singleton()]


def enumerate_reduced_words(
    p: Permutation, max_words: int = DEFAULT_MAX_WORDS
) -> Iterator[Word]:
    """Yield every reduced word of ``p`` exactly once, lexicographically.

    Raises EnumerationCapExceeded when more than ``max_words`` words exist.
    """
    n = p.degree
    for letters in kernels.reduced_word_list(p.entries, max_words):
        yield Word(letters, n)


def count_reduced_words(p: Permutation) -> int:
    """The number of reduced words of ``p``, without materialising them.

    >>> from redword.perm import Permutation
    >>> count_reduced_words(Permutation((4, 3, 2, 1)))
    16
    """
    return kernels.reduced_word_count(p.entries)


def _require_reduced(w: Word) -> None:
    if not w.is_reduced():
        raise ValueError(f"word {w.to_text()!r} is not reduced")


def _commutation_neighbors(w: Word) -> list[Word]:
    letters = w.letters
    out = []
    for k in range(len(letters) - 1):
        if abs(letters[k] - letters[k + 1]) >= 2:
            swapped = (
                letters[:k]
                + (letters[k + 1], letters[k])
                + letters[k + 2 :]
            )
            out.append(Word(swapped, w.degree))
    return out


def commutation_neighbors(w: Word) -> list[Word]:
    """Words one commutation move away: one adjacent pair with difference
    at least 2 swapped.  Rejects non-reduced input."""
    _require_reduced(w)
    return _commutation_neighbors(w)


def _braid_neighbors(w: Word) -> list[Word]:
    letters = w.letters
    out = []
    for k in range(len(letters) - 2):
        a, b, c = letters[k : k + 3]
        if a == c and abs(a - b) == 1:
            out.append(Word(letters[:k] + (b, a, b) + letters[k + 3 :], w.degree))
    return out


def braid_neighbors(w: Word) -> list[Word]:
    """Words one braid move away: a window (a, b, a) with |a-b| = 1 rewritten
    to (b, a, b).  Rejects non-reduced input."""
    _require_reduced(w)
    return _braid_neighbors(w)


def _closure(seed: Word, neighbors) -> frozenset[Word]:
    seen = {seed}
    queue = deque([seed])
    while queue:
        current = queue.popleft()
        for node in neighbors(current):
            if node not in seen:
                seen.add(node)
                queue.append(node)
    return frozenset(seen)


def commutation_class(w: Word) -> CommutationClass:
    """The breadth-first closure of ``w`` under commutation moves.

    >>> from redword.words import Word
    >>> sorted(x.to_text() for x in commutation_class(Word((1, 3), 4)).members)
    ['13', '31']
    """
    _require_reduced(w)
    members = _closure(w, _commutation_neighbors)
    return CommutationClass(members, min(members), w.evaluate())


def class_partition(
    p: Permutation, max_words: int = DEFAULT_MAX_WORDS
) -> ClassPartition:
    """Partition all reduced words of ``p`` into commutation classes.

    Scanning words in lexicographic order makes the first word met in each
    class its least member, so the classes come out sorted by representative.
    """
    words = kernels.reduced_word_list(p.entries, max_words)
    assigned: set[tuple[int, ...]] = set()
    classes = []
    n = p.degree
    for letters in words:
        if letters in assigned:
            continue
        members = _closure(Word(letters, n), _commutation_neighbors)
        assigned.update(m.letters for m in members)
        classes.append(CommutationClass(members, min(members), p))
    return ClassPartition(p, tuple(classes), len(words))


def is_connected_under_all_moves(
    p: Permutation, max_words: int = DEFAULT_MAX_WORDS
) -> bool:
    """True iff commutation plus braid moves connect all reduced words of
    ``p``.  They always do; this is a self-test oracle for the enumerator."""
    words = kernels.reduced_word_list(p.entries, max_words)
    seed = Word(words[0], p.degree)

    def both(w: Word) -> list[Word]:
        return _commutation_neighbors(w) + _braid_neighbors(w)

    return len(_closure(seed, both)) == len(words)

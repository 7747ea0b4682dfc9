"""Lexicographic ranks within the bordered and unbordered listings.

The rank of w is 1 plus the number of class members lexicographically
smaller than w.  Every smaller word shares some prefix w_1..w_{i-1} with w
and then drops below w_i, so summing the prefix-conditioned bordered counts
over all positions i and symbols c < w_i gives the bordered rank directly,
and the unbordered rank follows by subtracting from w's rank among all k^n
words.  Both functions accept any word, member of the class or not: the
result is still 1 plus the number of strictly smaller class members, which
is what the unranking binary search probes rely on.
"""

from __future__ import annotations

from .counting import count_with_prefix
from .words import Word, WordClass


def rank_bordered_raw(symbols, k: int) -> int:
    """Bordered rank of a raw symbol sequence (shared with the unranking probes)."""
    n = len(symbols)
    total = 0
    prefix = []
    for s in symbols:
        for c in range(1, s):
            prefix.append(c)
            total += count_with_prefix(prefix, k, n)
            prefix.pop()
        prefix.append(s)
    return 1 + total


def rank_unbordered_raw(symbols, k: int) -> int:
    """Unbordered rank of a raw symbol sequence."""
    position = 0
    power = 1
    for s in reversed(symbols):
        position += (s - 1) * power
        power *= k
    return 2 + position - rank_bordered_raw(symbols, k)


def rank_of_class(symbols, k: int, kind: WordClass) -> int:
    if kind is WordClass.BORDERED:
        return rank_bordered_raw(symbols, k)
    return rank_unbordered_raw(symbols, k)


def rank_bordered(w: Word) -> int:
    """1 + number of length-n bordered words lexicographically smaller than w."""
    return rank_bordered_raw(w.symbols, w.alphabet_size)


def rank_unbordered(w: Word) -> int:
    """1 + number of length-n unbordered words lexicographically smaller than w."""
    return rank_unbordered_raw(w.symbols, w.alphabet_size)

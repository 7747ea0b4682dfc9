"""Brute-force reference implementations, deliberately naive.

Nothing here touches the failure function or the counting recurrence: border
detection is direct prefix/suffix comparison and ranks come from exhaustive
enumeration, so agreement with the fast modules is meaningful evidence.
Enumeration is guarded; oversized instances are a hard error, not a slow path.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import product

from .errors import AlphabetSizeError, InstanceTooLargeError
from .words import Word, WordClass

ENUMERATION_LIMIT = 1 << 24


def is_bordered_naive(w: Word) -> bool:
    """Direct check of every proper prefix/suffix pair, O(n^2)."""
    s = w.symbols
    return any(s[:i] == s[len(s) - i :] for i in range(1, len(s)))


def enumerate_class(n: int, k: int, kind: WordClass) -> list[Word]:
    """All length-n words of the class, in lexicographic order."""
    return [Word(t, k) for t in _class_tuples(n, k, kind)]


def rank_naive(w: Word, kind: WordClass) -> int:
    """1 + number of class members strictly smaller than w (w need not belong)."""
    members = _class_tuples(len(w.symbols), w.alphabet_size, kind)
    return bisect_left(members, w.symbols) + 1


def _class_tuples(n, k, kind):
    if k < 2:
        raise AlphabetSizeError(f"alphabet size must be at least 2, got {k}")
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")
    if k**n > ENUMERATION_LIMIT:
        raise InstanceTooLargeError(
            f"{k}**{n} words exceed the enumeration guard of {ENUMERATION_LIMIT}"
        )
    keep_bordered = kind is WordClass.BORDERED
    return [
        t
        for t in product(range(1, k + 1), repeat=n)
        if _bordered(t) == keep_bordered
    ]


def _bordered(t):
    return any(t[:i] == t[len(t) - i :] for i in range(1, len(t)))

"""Counting bordered words that extend a fixed prefix.

The central quantity is the number of length-n bordered words over {1..k}
that have a given length-p word u as a prefix.  Partitioning those words by
the length i of their shortest border (which is always unbordered and at
most n/2) gives a two-case recurrence over the indicator arrays of u:

  n <= 2p:  every shortest border is an unbordered prefix of u.  A border of
            length i <= n-p fixes the word outside a free middle of length
            n-p-i; a longer border overlaps u and exists iff u itself has a
            border of length i-(n-p).

  n > 2p:   shortest borders of length i <= p contribute as above; shortest
            borders with p < i <= n/2 are unbordered length-i extensions of
            u, counted as k^(i-p) minus the bordered extensions, with a free
            middle of length n-2i.

The second case refers back to the same count at smaller lengths, so a
bottom-up pass over lengths p..floor(n/2) evaluates it in O(n^2) time and
O(n) space.  All arithmetic is exact (Python ints); the values reach k^n.
"""

from __future__ import annotations

from .borders import lps_array
from .errors import AlphabetSizeError
from .words import Word, WordClass


def count_with_prefix(symbols, k: int, n: int) -> int:
    """Number of length-n bordered words over {1..k} with ``symbols`` as a prefix.

    Raw-sequence core shared by the ranking loops; assumes 1 <= len(symbols) <= n
    and valid symbols.
    """
    p = len(symbols)
    lps = lps_array(symbols)
    # 1-based prefix lengths i with w_1..w_i unbordered, ascending
    unbordered = [i for i in range(1, p + 1) if lps[i - 1] == 0]
    borders = set()
    j = lps[p - 1]
    while j:
        borders.add(j)
        j = lps[j - 1]

    powers = [1] * (n - p + 1)
    for e in range(1, n - p + 1):
        powers[e] = powers[e - 1] * k

    def short_extension(m):
        # m <= 2p: shortest borders are unbordered prefixes of the base word
        free = m - p
        half = m // 2
        total = 0
        for i in unbordered:
            if i <= free:
                total += powers[free - i]
            elif i <= half and (i - free) in borders:
                total += 1
        return total

    if n <= 2 * p:
        return short_extension(n)

    # counts[m] = bordered extensions of length m, filled for m in p..n//2
    counts = [0] * (n // 2 + 1)

    def long_extension(m):
        free = m - p
        total = 0
        for i in unbordered:
            total += powers[free - i]
        for i in range(p + 1, m // 2 + 1):
            total += (powers[i - p] - counts[i]) * powers[m - 2 * i]
        return total

    for m in range(p, n // 2 + 1):
        counts[m] = short_extension(m) if m <= 2 * p else long_extension(m)
    return long_extension(n)


def count_bordered_with_prefix(u: Word, n: int) -> int:
    """Exact number of length-n bordered words over u's alphabet with prefix u."""
    if n < len(u):
        raise ValueError(f"target length {n} is shorter than the prefix ({len(u)})")
    return count_with_prefix(u.symbols, u.alphabet_size, n)


def count_bordered(n: int, k: int) -> int:
    """Number of length-n bordered words over a k-letter alphabet."""
    _check_instance(n, k)
    return sum(count_with_prefix((c,), k, n) for c in range(1, k + 1))


def count_unbordered(n: int, k: int) -> int:
    """Number of length-n unbordered words over a k-letter alphabet."""
    _check_instance(n, k)
    return k**n - count_bordered(n, k)


def count_class(n: int, k: int, kind: WordClass) -> int:
    """Size of the requested listing at (n, k)."""
    if kind is WordClass.BORDERED:
        return count_bordered(n, k)
    return count_unbordered(n, k)


def _check_instance(n, k):
    if k < 2:
        raise AlphabetSizeError(f"alphabet size must be at least 2, got {k}")
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")

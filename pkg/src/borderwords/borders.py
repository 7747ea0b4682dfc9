"""Failure function and border indicators of a word.

A border of w is a word that is both a non-empty proper prefix and a
non-empty proper suffix of w.  Everything in this module derives from one
linear-time primitive, the failure function (prefix border array) of the
Knuth-Morris-Pratt string matcher: entry i holds the length of the longest
border of the prefix w_1..w_i, so a zero entry marks an unbordered prefix,
and following the chain lps[n], lps[lps[n]], ... from the last entry visits
exactly the border lengths of the whole word.
"""

from __future__ import annotations

from .words import Word


def lps_array(symbols) -> list[int]:
    """Failure function of a raw symbol sequence; entry i-1 is the length of
    the longest border of the length-i prefix (0 if that prefix is unbordered)."""
    n = len(symbols)
    lps = [0] * n
    length = 0
    for i in range(1, n):
        while length and symbols[i] != symbols[length]:
            length = lps[length - 1]
        if symbols[i] == symbols[length]:
            length += 1
        lps[i] = length
    return lps


def border_lengths(symbols) -> set[int]:
    """All border lengths of the whole sequence, via the failure-function chain."""
    lps = lps_array(symbols)
    lengths = set()
    j = lps[-1]
    while j:
        lengths.add(j)
        j = lps[j - 1]
    return lengths


def compute_lps(w: Word) -> list[int]:
    """Prefix border array of w, one entry per prefix length 1..n."""
    return lps_array(w.symbols)


def unbordered_prefix_indicator(w: Word) -> list[int]:
    """Bit i-1 is 1 iff the prefix w_1..w_i is unbordered."""
    return [1 if length == 0 else 0 for length in lps_array(w.symbols)]


def border_indicator(w: Word) -> list[int]:
    """Bit i-1 is 1 iff w has a border of length i; the last bit is always 0."""
    bits = [0] * len(w.symbols)
    for j in border_lengths(w.symbols):
        bits[j - 1] = 1
    return bits


def is_bordered(w: Word) -> bool:
    """True iff w has a border (a length-1 word never does)."""
    return lps_array(w.symbols)[-1] > 0

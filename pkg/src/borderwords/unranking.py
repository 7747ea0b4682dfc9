"""Recovering the word at a given rank, and uniform random sampling.

Unranking builds the word position by position: the working word starts as
1^n, and for each position a binary search over the alphabet finds the
largest symbol whose 1-padded completion still has rank <= r.  Because the
rank functions are total, probes may leave the target class; taking the
largest feasible symbol at every position is what lands on the class member.
Sampling draws a rank uniformly from [1, count] and unranks it, so every
class member is equally likely.
"""

from __future__ import annotations

import random

from .counting import count_class
from .errors import EmptyClassError, RankOutOfRangeError
from .ranking import rank_bordered_raw, rank_unbordered_raw
from .words import Word, WordClass


def unrank(r: int, n: int, k: int, kind: WordClass) -> Word:
    """The unique word of the class whose rank is r, for 1 <= r <= class count.

    Out-of-range ranks are rejected up front: letting an oversized rank fall
    through would silently return the largest word regardless of class.
    """
    total = count_class(n, k, kind)
    if not 1 <= r <= total:
        raise RankOutOfRangeError(
            f"rank {r} is outside 1..{total} for {kind.value} words "
            f"of length {n} over a {k}-letter alphabet"
        )
    rank_of = rank_bordered_raw if kind is WordClass.BORDERED else rank_unbordered_raw
    w = [1] * n
    for i in range(n):
        left, right = 1, k
        while left < right:
            # ceiling midpoint: mid > left, so both branches shrink the interval
            mid = (left + right + 1) // 2
            save = w[i]
            w[i] = mid
            if rank_of(w, k) <= r:
                left = mid
            else:
                w[i] = save
                right = mid - 1
    return Word(tuple(w), k)


def sample_uniform(n: int, k: int, kind: WordClass, seed: int) -> Word:
    """One uniformly random word of the class; identical seed, identical word."""
    return sample_words(n, k, kind, seed, 1)[0]


def sample_words(n: int, k: int, kind: WordClass, seed: int, count: int) -> list[Word]:
    """``count`` uniform draws from one generator seeded once, in draw order."""
    total = count_class(n, k, kind)
    if total == 0:
        raise EmptyClassError(
            f"no {kind.value} words of length {n} over a {k}-letter alphabet"
        )
    rng = random.Random(seed)
    # randrange rejects over the minimal bit width, so each draw is exactly uniform
    return [unrank(rng.randrange(total) + 1, n, k, kind) for _ in range(count)]

"""Definition-level recomputation used as the independent side of oracle tests.

Everything here works by direct prefix/suffix slice comparison on symbol
tuples; nothing imports the package's fast primitives.
"""

from itertools import product


def all_words(n, k):
    return product(range(1, k + 1), repeat=n)


def is_bordered_by_definition(t):
    return any(t[:i] == t[len(t) - i :] for i in range(1, len(t)))


def border_set_by_definition(t):
    n = len(t)
    return {i for i in range(1, n) if t[:i] == t[n - i :]}


def lps_by_definition(t):
    """Longest border of every prefix, scanning candidate lengths downward."""
    out = []
    for i in range(1, len(t) + 1):
        prefix = t[:i]
        best = 0
        for j in range(i - 1, 0, -1):
            if prefix[:j] == prefix[i - j :]:
                best = j
                break
        out.append(best)
    return out


def bordered_completion_count(u, k, n):
    """Bordered length-n words with prefix u, counted completion by completion."""
    total = 0
    for tail in product(range(1, k + 1), repeat=n - len(u)):
        if is_bordered_by_definition(u + tail):
            total += 1
    return total

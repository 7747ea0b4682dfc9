import pytest

from borderwords import (
    AlphabetSizeError,
    Word,
    WordClass,
    count_bordered,
    count_bordered_with_prefix,
    count_class,
    count_unbordered,
    is_bordered,
)

from naive import all_words, bordered_completion_count, is_bordered_by_definition


@pytest.mark.parametrize(
    "prefix, n, expected",
    [
        ((1,), 1, 0),  # no bordered words of length 1
        ((1,), 3, 2),  # completions: 111 and 121
        ((1, 2), 4, 3),  # completions: 1211, 1212, 1221
        ((1,), 2, 1),  # only 11
    ],
)
def test_prefix_count_examples(prefix, n, expected):
    assert bordered_completion_count(prefix, 2, n) == expected
    assert count_bordered_with_prefix(Word(prefix, 2), n) == expected


@pytest.mark.parametrize(
    "n, k, expected",
    [(1, 2, 0), (3, 2, 4), (4, 2, 10)],
)
def test_count_bordered_examples(n, k, expected):
    assert count_bordered(n, k) == expected


@pytest.mark.parametrize(
    "n, k, expected",
    [(1, 2, 2), (4, 2, 6), (3, 3, 18)],
)
def test_count_unbordered_examples(n, k, expected):
    assert count_unbordered(n, k) == expected


def test_rejects_prefix_longer_than_target():
    with pytest.raises(ValueError):
        count_bordered_with_prefix(Word((1, 2), 2), 1)


def test_rejects_bad_instances():
    with pytest.raises(AlphabetSizeError):
        count_bordered(3, 1)
    with pytest.raises(AlphabetSizeError):
        count_unbordered(3, 0)
    with pytest.raises(ValueError):
        count_bordered(0, 2)


def test_count_class_dispatch():
    assert count_class(3, 2, WordClass.BORDERED) == 4
    assert count_class(3, 2, WordClass.UNBORDERED) == 4


@pytest.mark.parametrize("k, nmax", [(2, 8), (3, 5)])
def test_recurrence_matches_brute_force(k, nmax):
    for n in range(1, nmax + 1):
        for p in range(1, n + 1):
            for u in all_words(p, k):
                assert count_bordered_with_prefix(
                    Word(u, k), n
                ) == bordered_completion_count(u, k, n)


@pytest.mark.parametrize("k, nmax", [(2, 9), (3, 6)])
def test_prefix_decomposition(k, nmax):
    for n in range(2, nmax + 1):
        for p in range(1, n):
            for u in all_words(p, k):
                whole = count_bordered_with_prefix(Word(u, k), n)
                parts = sum(
                    count_bordered_with_prefix(Word(u + (c,), k), n)
                    for c in range(1, k + 1)
                )
                assert whole == parts


@pytest.mark.parametrize("k, nmax", [(2, 9), (3, 6)])
def test_extension_base_and_bound(k, nmax):
    for n in range(1, nmax + 1):
        for p in range(1, n + 1):
            for u in all_words(p, k):
                w = Word(u, k)
                value = count_bordered_with_prefix(w, n)
                assert 0 <= value <= k ** (n - p)
                if p == n:
                    assert value == (1 if is_bordered(w) else 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_complement(k):
    for n in range(1, 9):
        assert count_bordered(n, k) + count_unbordered(n, k) == k**n


def test_exact_at_large_sizes():
    # the two halves must still sum to k**n when values far exceed 2**64
    n, k = 300, 5
    assert count_bordered(n, k) + count_unbordered(n, k) == k**n
    assert count_bordered_with_prefix(Word((1,) * 10, k), n) <= k ** (n - 10)


def test_unbordered_counts_against_known_small_values():
    # verified against brute-force enumeration of all binary words
    expected = [2, 2, 4, 6, 12, 20, 40, 74]
    brute = [
        sum(1 for t in all_words(n, 2) if not is_bordered_by_definition(t))
        for n in range(1, 9)
    ]
    assert brute == expected
    assert [count_unbordered(n, 2) for n in range(1, 9)] == expected

"""Domain errors shared across the package."""


class BorderWordError(Exception):
    """Base class for domain errors raised by this package."""


class AlphabetSizeError(BorderWordError):
    """Alphabet size k < 2; every counting formula here assumes at least two symbols."""


class RankOutOfRangeError(BorderWordError):
    """Requested rank lies outside 1..count for the requested class."""


class EmptyClassError(BorderWordError):
    """The requested class has no members at this (n, k)."""


class InstanceTooLargeError(BorderWordError):
    """Brute-force enumeration refused: k**n exceeds the guard threshold."""

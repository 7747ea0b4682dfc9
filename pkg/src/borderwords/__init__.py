"""Ranking, unranking, counting, and uniform sampling of bordered and
unbordered words in lexicographic order, with exact arbitrary-precision
counts and a brute-force oracle for cross-checking."""

from .borders import (
    border_indicator,
    compute_lps,
    is_bordered,
    unbordered_prefix_indicator,
)
from .counting import (
    count_bordered,
    count_bordered_with_prefix,
    count_class,
    count_unbordered,
)
from .errors import (
    AlphabetSizeError,
    BorderWordError,
    EmptyClassError,
    InstanceTooLargeError,
    RankOutOfRangeError,
)
from .ranking import rank_bordered, rank_unbordered
from .unranking import sample_uniform, sample_words, unrank
from .words import Word, WordClass

__all__ = [
    "AlphabetSizeError",
    "BorderWordError",
    "EmptyClassError",
    "InstanceTooLargeError",
    "RankOutOfRangeError",
    "Word",
    "WordClass",
    "border_indicator",
    "compute_lps",
    "count_bordered",
    "count_bordered_with_prefix",
    "count_class",
    "count_unbordered",
    "is_bordered",
    "rank_bordered",
    "rank_unbordered",
    "sample_uniform",
    "sample_words",
    "unbordered_prefix_indicator",
    "unrank",
]

"""Words over the ordered alphabet {1, 2, ..., k} and their text encoding.

Symbols are 1-based integers with 1 < 2 < ... < k, and all listings in this
package order words lexicographically under that symbol order.  The text
encoding is a digit string for k <= 9 ("212") and comma-separated decimal
symbols for k >= 10 ("2,1,12").
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AlphabetSizeError


class WordClass(Enum):
    """Which lexicographic listing an operation targets."""

    BORDERED = "bordered"
    UNBORDERED = "unbordered"


@dataclass(frozen=True)
class Word:
    """A non-empty word w_1 w_2 ... w_n over the alphabet {1, ..., alphabet_size}."""

    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise AlphabetSizeError(
                f"alphabet size must be at least 2, got {self.alphabet_size}"
            )
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("a word must have at least one symbol")
        k = self.alphabet_size
        for s in self.symbols:
            if not (isinstance(s, int) and 1 <= s <= k):
                raise ValueError(f"symbol {s!r} is outside the alphabet 1..{k}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @classmethod
    def from_text(cls, text: str, alphabet_size: int) -> "Word":
        return cls(parse_symbols(text, alphabet_size), alphabet_size)

    def to_text(self) -> str:
        return render_symbols(self.symbols, self.alphabet_size)


def parse_symbols(text: str, alphabet_size: int) -> tuple[int, ...]:
    """Parse the text encoding of a word into a symbol tuple.

    Comma form is accepted for any alphabet size; a bare string is one symbol
    per character for k <= 9 and a single decimal symbol for k >= 10.
    Raises ValueError on malformed text (range checks happen in Word).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word text")
    if "," in text:
        parts = [part.strip() for part in text.split(",")]
        return tuple(_parse_symbol(part) for part in parts)
    if alphabet_size <= 9:
        return tuple(_parse_symbol(ch) for ch in text)
    return (_parse_symbol(text),)


def render_symbols(symbols, alphabet_size: int) -> str:
    """Inverse of parse_symbols: digits for k <= 9, comma-separated otherwise."""
    if alphabet_size <= 9:
        return "".join(str(s) for s in symbols)
    return ",".join(str(s) for s in symbols)


def _parse_symbol(token: str) -> int:
    if not token.isdigit():
        raise ValueError(f"invalid symbol {token!r}: expected a decimal integer")
    return int(token)

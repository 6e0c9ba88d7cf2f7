"""Alphabets, words, parsing, and elementary word functions.

Symbols are stored internally as 0-based integers indexing into the
alphabet's character list; all public position values in this package
are 1-based.  Every type here is immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class AlphabetMismatchError(ValueError):
    """Two words were combined that do not share the same alphabet."""


class GuardExceeded(RuntimeError):
    """A configured enumeration/set-size guard would be exceeded."""


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of distinct printable characters.

    The character order defines the total order on symbols; symbol i
    (0-based) is rendered as ``letters[i]``.
    """

    letters: str

    def __post_init__(self) -> None:
        if len(self.letters) < 1:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"alphabet characters must be distinct: {self.letters!r}")

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, ch: str) -> int:
        """0-based symbol for a character; raises ValueError if absent."""
        i = self.letters.find(ch)
        if i < 0:
            raise ValueError(f"character {ch!r} not in alphabet {self.letters!r}")
        return i

    def char(self, symbol: int) -> str:
        return self.letters[symbol]

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, ch: str) -> bool:
        return ch in self.letters


@dataclass(frozen=True)
class Word:
    """A finite sequence of symbols over a fixed alphabet.

    ``symbols`` holds 0-based symbol indices.  Equality and hashing cover
    the alphabet as well, so words over different alphabets never compare
    equal; ordered outputs (set extraction, enumeration, generators) are
    produced in lexicographic symbol order by construction.
    """

    alphabet: Alphabet
    symbols: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = self.alphabet.size
        for s in self.symbols:
            if not 0 <= s < n:
                raise ValueError(f"symbol index {s} outside alphabet of size {n}")

    @property
    def text(self) -> str:
        return "".join(self.alphabet.letters[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return self.text

    def factor(self, start: int, end: int) -> "Word":
        """The factor w[start..end], 1-based inclusive bounds (empty if start > end)."""
        if start < 1 or end > len(self.symbols):
            raise ValueError(
                f"factor bounds [{start}, {end}] outside word of length {len(self.symbols)}"
            )
        return Word(self.alphabet, self.symbols[start - 1 : end])


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a text line into a Word.

    Args:
        text: one character per symbol.
        alphabet: when omitted, inferred as the distinct characters of
            ``text`` in ascending character order.

    Raises:
        ValueError: a character falls outside the supplied alphabet
            (the message names the character and its 1-based position),
            or no alphabet was supplied for an empty text.
    """
    if alphabet is None:
        if not text:
            raise ValueError("empty word needs an explicit alphabet")
        alphabet = Alphabet("".join(sorted(set(text))))
    symbols = []
    for pos, ch in enumerate(text, start=1):
        if ch not in alphabet:
            raise ValueError(
                f"character {ch!r} at position {pos} not in alphabet {alphabet.letters!r}"
            )
        symbols.append(alphabet.index(ch))
    return Word(alphabet, tuple(symbols))


def letters_of(w: Word) -> frozenset[int]:
    """The set of symbol indices occurring in w."""
    return frozenset(w.symbols)


def reverse(w: Word) -> Word:
    return Word(w.alphabet, w.symbols[::-1])


def canonical_word(alphabet: Alphabet) -> Word:
    """The length-sigma word listing all symbols in ascending order."""
    return Word(alphabet, tuple(range(alphabet.size)))


def require_same_alphabet(w: Word, u: Word) -> None:
    if w.alphabet != u.alphabet:
        raise AlphabetMismatchError(
            f"alphabet mismatch: {w.alphabet.letters!r} vs {u.alphabet.letters!r}"
        )

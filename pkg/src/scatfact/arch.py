"""Arch factorization, universality index, and the next-alphabet-position function.

The arch factorization splits a word greedily from the left: each arch is
the shortest prefix extension containing the whole alphabet, and the rest
is whatever suffix remains (it misses at least one letter).  The number
of arches is the universality index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .words import Word, letters_of

NONE_POS = -1


@dataclass(frozen=True)
class ArchFactorization:
    """Arches and rest of one word, as 1-based inclusive index ranges."""

    word: Word
    arch_ranges: tuple[tuple[int, int], ...]
    rest_start: int  # 1-based start of the rest; len(word)+1 when rest is empty

    @property
    def iota(self) -> int:
        return len(self.arch_ranges)

    def arch(self, i: int) -> Word:
        """Arch number i, 1-based."""
        self._check_index(i)
        lo, hi = self.arch_ranges[i - 1]
        return self.word.factor(lo, hi)

    def arches(self) -> list[Word]:
        return [self.word.factor(lo, hi) for lo, hi in self.arch_ranges]

    @property
    def rest(self) -> Word:
        return self.word.factor(self.rest_start, len(self.word))

    @property
    def modus(self) -> Word:
        """The word of unique last letters of the arches."""
        syms = tuple(self.word.symbols[hi - 1] for _, hi in self.arch_ranges)
        return Word(self.word.alphabet, syms)

    def inner(self, i: int) -> Word:
        """Arch i with its last letter removed, 1-based."""
        self._check_index(i)
        lo, hi = self.arch_ranges[i - 1]
        return self.word.factor(lo, hi - 1)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.iota:
            raise ValueError(f"arch index {i} out of range 1..{self.iota}")

    def render(self) -> str:
        """Parenthesis notation, e.g. "(aab)(bba)a"."""
        parts = [f"({self.word.factor(lo, hi).text})" for lo, hi in self.arch_ranges]
        parts.append(self.rest.text)
        return "".join(parts)


def arch_factorize(w: Word) -> ArchFactorization:
    """Greedy left-to-right arch factorization (unique by construction)."""
    sigma = w.alphabet.size
    ranges: list[tuple[int, int]] = []
    start = 1
    seen = set()
    for pos, sym in enumerate(w.symbols, start=1):
        seen.add(sym)
        if len(seen) == sigma:
            ranges.append((start, pos))
            start = pos + 1
            seen.clear()
    return ArchFactorization(w, tuple(ranges), start)


def universality_index(w: Word) -> int:
    return arch_factorize(w).iota


def is_perfect_universal(w: Word, k: int) -> bool:
    """iota(w) = k and the rest is empty."""
    f = arch_factorize(w)
    return f.iota == k and f.rest_start == len(w) + 1


def is_min_perfect_universal(w: Word, k: int) -> bool:
    """Perfect k-universal of the minimum possible length k*sigma."""
    return is_perfect_universal(w, k) and len(w) == k * w.alphabet.size


def next_alph_pos(w: Word, i: int, s: int) -> int:
    """Least position j > i such that w[i+1..j] contains exactly s distinct letters.

    Args:
        w: the word.
        i: 0..|w|; i=0 means "before position 1".
        s: required number of distinct letters, 1..sigma.

    Returns:
        The 1-based position j, or NONE_POS (-1) when the suffix after i
        holds fewer than s distinct letters.
    """
    sigma = w.alphabet.size
    if not 1 <= s <= sigma:
        raise ValueError(f"s={s} outside 1..{sigma}")
    if not 0 <= i <= len(w):
        raise ValueError(f"position i={i} outside 0..{len(w)}")
    seen = set()
    for j in range(i + 1, len(w) + 1):
        seen.add(w.symbols[j - 1])
        if len(seen) == s:
            return j
    return NONE_POS


def next_alph_pos_table(w: Word) -> np.ndarray:
    """Precomputed next_alph_pos values for hot loops.

    Returns an int64 array of shape (|w|+1, sigma); entry [i, s-1] equals
    next_alph_pos(w, i, s) with NONE_POS for undefined.
    """
    n = len(w)
    sigma = w.alphabet.size
    table = np.full((n + 1, sigma), NONE_POS, dtype=np.int64)
    for i in range(n + 1):
        count = 0
        seen = bytearray(sigma)
        for j in range(i + 1, n + 1):
            sym = w.symbols[j - 1]
            if not seen[sym]:
                seen[sym] = 1
                count += 1
                table[i, count - 1] = j
                if count == sigma:
                    break
    return table


def render_factorization(w: Word) -> str:
    return arch_factorize(w).render()


__all__ = [
    "NONE_POS",
    "ArchFactorization",
    "arch_factorize",
    "universality_index",
    "is_perfect_universal",
    "is_min_perfect_universal",
    "next_alph_pos",
    "next_alph_pos_table",
    "render_factorization",
]

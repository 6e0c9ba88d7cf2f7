"""Extremal word families: fewest and most absent scattered factors.

Among all words with universality index iota, two families are extreme for
length-k scattered factors (k > iota):

* min-absent words maximize |ScatFact_k|: a modus letter ``a`` repeated
  iota times, interleaved with blocks of (k - iota) permutations of the
  remaining letters; the shortest such words have a clean closed-form
  count and length.
* w_min minimizes |ScatFact_k| for every k simultaneously: iota arches
  alternating a fixed permutation with its reverse.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .arch import NONE_POS, arch_factorize, universality_index
from .words import Alphabet, GuardExceeded, Word

DEFAULT_GENERATOR_GUARD = 10**6

_DEFAULT_LETTERS = string.ascii_lowercase + string.ascii_uppercase + string.digits


def default_alphabet(sigma: int) -> Alphabet:
    if sigma > len(_DEFAULT_LETTERS):
        raise ValueError(f"no default alphabet with {sigma} symbols; pass one explicitly")
    return Alphabet(_DEFAULT_LETTERS[:sigma])


@dataclass(frozen=True)
class ExtremalParams:
    """The triple (sigma, iota, k) with sigma >= 2 and 1 <= iota < k."""

    sigma: int
    iota: int
    k: int

    def __post_init__(self) -> None:
        if self.sigma < 2:
            raise ValueError("sigma must be at least 2")
        if self.iota < 1:
            raise ValueError("iota must be at least 1")
        if self.k <= self.iota:
            raise ValueError(f"k must exceed iota (got k={self.k}, iota={self.iota})")


def max_scatfact_count(p: ExtremalParams) -> int:
    """Maximum of |ScatFact_k(w)| over all words w with iota(w) = iota."""
    s = p.sigma - 1
    return sum(math.comb(p.k, j) * s ** (p.k - j) for j in range(p.iota + 1))


def min_absent_count(p: ExtremalParams) -> int:
    """Minimal number of absent length-k factors among iota-universal words."""
    return p.sigma**p.k - max_scatfact_count(p)


def shortest_min_absent_length(p: ExtremalParams) -> int:
    return (p.iota + 1) * (p.sigma - 1) * (p.k - p.iota) + p.iota


def count_shortest_min_absent_words(p: ExtremalParams) -> int:
    return p.sigma * math.factorial(p.sigma - 1) ** ((p.iota + 1) * (p.k - p.iota))


def _resolve_alphabet(alphabet: Alphabet | None, sigma: int) -> Alphabet:
    if alphabet is None:
        return default_alphabet(sigma)
    if alphabet.size != sigma:
        raise ValueError(f"alphabet has {alphabet.size} symbols, expected {sigma}")
    return alphabet


def min_absent_word(
    p: ExtremalParams,
    modus_letter: str,
    inner_perms: Sequence[str] | None = None,
    alphabet: Alphabet | None = None,
) -> Word:
    """Construct a shortest iota-universal word with the fewest absent factors.

    The word is B_1 a B_2 a ... B_iota a B_{iota+1} where a is the modus
    letter and every block B_t concatenates (k - iota) permutations of the
    remaining sigma-1 letters.  By default all permutation slots use the
    ascending permutation; ``inner_perms`` overrides them, one string per
    slot, (iota+1)*(k-iota) in total.
    """
    alphabet = _resolve_alphabet(alphabet, p.sigma)
    if len(modus_letter) != 1 or modus_letter not in alphabet:
        raise ValueError(f"modus letter {modus_letter!r} not in alphabet {alphabet.letters!r}")
    a = alphabet.index(modus_letter)
    others = [s for s in range(p.sigma) if s != a]
    slots = (p.iota + 1) * (p.k - p.iota)
    if inner_perms is None:
        perms = [tuple(others)] * slots
    else:
        if len(inner_perms) != slots:
            raise ValueError(f"expected {slots} permutations, got {len(inner_perms)}")
        perms = []
        for perm in inner_perms:
            syms = tuple(alphabet.index(ch) for ch in perm)
            if sorted(syms) != others:
                raise ValueError(
                    f"permutation {perm!r} is not a permutation of the letters other "
                    f"than {modus_letter!r}"
                )
            perms.append(syms)
    per_block = p.k - p.iota
    symbols: list[int] = []
    for t in range(p.iota + 1):
        for perm in perms[t * per_block : (t + 1) * per_block]:
            symbols.extend(perm)
        if t < p.iota:
            symbols.append(a)
    return Word(alphabet, tuple(symbols))


def enumerate_shortest_min_absent_words(
    p: ExtremalParams,
    alphabet: Alphabet | None = None,
    guard: int = DEFAULT_GENERATOR_GUARD,
) -> Iterator[Word]:
    """Stream every shortest min-absent word exactly once.

    Words factor uniquely as a modus letter choice plus one permutation of
    the remaining letters per slot, so the stream length is
    count_shortest_min_absent_words(p).  Ordered by modus letter, then by
    the slot permutation tuples lexicographically.
    """
    alphabet = _resolve_alphabet(alphabet, p.sigma)
    total = count_shortest_min_absent_words(p)
    if total > guard:
        raise GuardExceeded(f"{total} shortest words exceed guard {guard}")
    slots = (p.iota + 1) * (p.k - p.iota)
    for a in range(p.sigma):
        others = [s for s in range(p.sigma) if s != a]
        for combo in product(permutations(others), repeat=slots):
            yield min_absent_word(
                p,
                alphabet.char(a),
                ["".join(alphabet.char(s) for s in perm) for perm in combo],
                alphabet,
            )


def min_scatfact_word(
    sigma: int,
    iota: int,
    alphabet: Alphabet | None = None,
    permutation: str | None = None,
) -> Word:
    """w_min: iota arches alternating a permutation P with its reverse.

    For every word w' with iota(w') = iota and every k,
    |ScatFact_k(w_min)| <= |ScatFact_k(w')|.
    """
    if sigma < 2:
        raise ValueError("sigma must be at least 2")
    if iota < 1:
        raise ValueError("iota must be at least 1")
    alphabet = _resolve_alphabet(alphabet, sigma)
    if permutation is None:
        perm = tuple(range(sigma))
    else:
        perm = tuple(alphabet.index(ch) for ch in permutation)
        if sorted(perm) != list(range(sigma)):
            raise ValueError(f"{permutation!r} is not a permutation of {alphabet.letters!r}")
    symbols: list[int] = []
    for i in range(iota):
        symbols.extend(perm if i % 2 == 0 else perm[::-1])
    return Word(alphabet, tuple(symbols))


def truncate_to_min_length(w: Word) -> Word:
    """Shrink w to length iota(w)*sigma without changing its universality index.

    Repeatedly deletes the leftmost position whose removal preserves iota.
    Such a position always exists while |w| exceeds iota*sigma; the result's
    scattered factors are a subset of w's.
    """
    iota = universality_index(w)
    if iota < 1:
        raise ValueError("word must have at least one arch")
    target = iota * w.alphabet.size
    symbols = list(w.symbols)
    while len(symbols) > target:
        for i in range(len(symbols)):
            candidate = symbols[:i] + symbols[i + 1 :]
            if universality_index(Word(w.alphabet, tuple(candidate))) == iota:
                symbols = candidate
                break
        else:
            raise RuntimeError("no deletable position found; should be impossible")
    return Word(w.alphabet, tuple(symbols))


def wmin_next_alph_pos_formula(sigma: int, iota: int, j: int, s: int) -> int:
    """Closed form of next_alph_pos on w_min(sigma, iota).

    Piecewise in r = j mod sigma: inside the reach of the current arch the
    answer is j + s; otherwise it restarts at the next arch boundary when
    one exists; otherwise there is no position.  Outputs beyond the word
    end (possible only at j = |w_min|) map to NONE_POS, keeping the
    codomain a valid position set.
    """
    n = iota * sigma
    if not 0 <= j <= n:
        raise ValueError(f"position {j} outside 0..{n}")
    if not 1 <= s <= sigma:
        raise ValueError(f"s={s} outside 1..{sigma}")
    r = j % sigma
    if r == 0 or s <= sigma - r:
        value = j + s
    elif j // sigma + 1 < iota:
        value = (j // sigma) * sigma + sigma + s
    else:
        return NONE_POS
    return value if value <= n else NONE_POS


def arch_structure_summary(w: Word) -> dict:
    """Small JSON-friendly report used by the CLI construct/bounds commands."""
    f = arch_factorize(w)
    return {
        "word": w.text,
        "length": len(w),
        "iota": f.iota,
        "factorization": f.render(),
        "modus": f.modus.text,
        "rest": f.rest.text,
    }

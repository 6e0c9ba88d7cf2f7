"""Scattered-factor machinery: automaton, counting, sets, congruence, enumeration.

A scattered factor of w is any word obtained by deleting positions of w
while keeping the order of the rest (a subsequence).  Everything in this
module runs off two ingredients: the subsequence automaton (next-occurrence
table) and the last-occurrence-corrected counting DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .arch import NONE_POS, next_alph_pos
from .words import GuardExceeded, Word, require_same_alphabet

DEFAULT_SET_GUARD = 10**6


@dataclass(frozen=True)
class SubsequenceAutomaton:
    """Next-occurrence table over states 0..|w|.

    next(i, a) = min{ j > i : w[j] = a }, or NONE_POS.  States strictly
    increase along transitions, so the transition relation is acyclic and
    paths from state 0 spell exactly the distinct scattered factors.
    """

    word: Word
    table: tuple[tuple[int, ...], ...]

    def next(self, state: int, symbol: int) -> int:
        return self.table[state][symbol]

    @property
    def n(self) -> int:
        return len(self.word)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)


def build_automaton(w: Word) -> SubsequenceAutomaton:
    """Build the next-occurrence table in one right-to-left pass, O(sigma*|w|)."""
    n = len(w)
    sigma = w.alphabet.size
    rows: list[tuple[int, ...]] = [()] * (n + 1)
    cur = [NONE_POS] * sigma
    rows[n] = tuple(cur)
    for i in range(n - 1, -1, -1):
        cur[w.symbols[i]] = i + 1
        rows[i] = tuple(cur)
    return SubsequenceAutomaton(w, tuple(rows))


def is_scattered_factor(w: Word, u: Word) -> bool:
    """True iff u is a scattered factor of w (greedy automaton walk)."""
    require_same_alphabet(w, u)
    aut = build_automaton(w)
    state = 0
    for a in u.symbols:
        state = aut.next(state, a)
        if state == NONE_POS:
            return False
    return True


@dataclass(frozen=True)
class CountTable:
    """Exact |ScatFact_k(w)| for every k in 0..|w| (arbitrary precision)."""

    word: Word
    counts: tuple[int, ...]

    def count(self, k: int) -> int:
        if k < 0:
            raise ValueError("k must be non-negative")
        return self.counts[k] if k < len(self.counts) else 0

    def to_json_dict(self) -> dict:
        return {"word": self.word.text, "counts": [str(c) for c in self.counts]}


def count_scatfact_all_lengths(w: Word) -> CountTable:
    """Count distinct scattered factors of every length.

    DP over positions with last-occurrence correction:
    D[i][k] = D[i-1][k] + D[i-1][k-1] - D[p-1][k-1] where p is the previous
    occurrence of w[i] (subtraction omitted when there is none).  Python
    integers keep the result exact; total work is O(|w|^2) cell updates.
    """
    n = len(w)
    cur = [1] + [0] * n
    snap: dict[int, list[int]] = {}
    for i, sym in enumerate(w.symbols, start=1):
        prev_row = cur.copy()
        prev_occ = snap.get(sym)
        if prev_occ is None:
            for k in range(min(i, n), 0, -1):
                cur[k] = cur[k] + cur[k - 1]
        else:
            for k in range(min(i, n), 0, -1):
                cur[k] = cur[k] + cur[k - 1] - prev_occ[k - 1]
        snap[sym] = prev_row
    return CountTable(w, tuple(cur))


def absent_count(w: Word, k: int) -> int:
    """Number of absent length-k scattered factors: sigma^k - |ScatFact_k(w)|."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return w.alphabet.size**k - count_scatfact_all_lengths(w).count(k)


def enumerate_scatfact(
    w: Word, k: int, limit: int | None = None
) -> Iterator[Word]:
    """Yield every element of ScatFact_k(w) exactly once, lexicographically.

    Depth-first over the subsequence automaton from state 0, symbols in
    ascending order; a transition into state j is pruned when fewer than
    k - depth - 1 letters remain after j, so every explored branch
    completes.  Preprocessing O(sigma*|w|); worst-case delay between
    consecutive outputs O(k*sigma) basic steps.
    """
    for word, _ in enumerate_scatfact_with_delays(w, k, limit):
        yield word


def enumerate_scatfact_with_delays(
    w: Word, k: int, limit: int | None = None
) -> Iterator[tuple[Word, int]]:
    """Instrumented enumeration: yields (factor, basic steps since last yield).

    A basic step is one automaton transition lookup or one stack pop; the
    counter exists so tests can pin the delay bound without wall clocks.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if limit is not None and limit <= 0:
        return
    aut = build_automaton(w)
    table = aut.table
    n = len(w)
    sigma = w.alphabet.size
    states = [0] * (k + 1)
    syms = [0] * k
    trynext = [0] * (k + 1)
    depth = 0
    steps = 0
    yielded = 0
    while depth >= 0:
        if depth == k:
            yield Word(w.alphabet, tuple(syms)), steps
            steps = 0
            yielded += 1
            if limit is not None and yielded >= limit:
                return
            depth -= 1
            steps += 1
            continue
        a = trynext[depth]
        if a == sigma:
            depth -= 1
            steps += 1
            continue
        trynext[depth] = a + 1
        j = table[states[depth]][a]
        steps += 1
        if j != NONE_POS and n - j >= k - depth - 1:
            syms[depth] = a
            states[depth + 1] = j
            depth += 1
            trynext[depth] = 0


def scatfact_set(w: Word, k: int, guard: int = DEFAULT_SET_GUARD) -> list[Word]:
    """The full set ScatFact_k(w) in lexicographic order.

    Raises GuardExceeded when sigma^k exceeds the guard; use
    enumerate_scatfact for streaming access in that case.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if w.alphabet.size**k > guard:
        raise GuardExceeded(
            f"sigma^k = {w.alphabet.size**k} exceeds guard {guard}; "
            "use enumerate_scatfact instead"
        )
    return list(enumerate_scatfact(w, k))


@dataclass(frozen=True)
class CanonicalEmbedding:
    """Leftmost embedding of a scattered factor with its gap alphabet sizes.

    positions is strictly increasing and pointwise minimal among all
    embeddings of ``factor`` in ``source``; gap_alphabet_sizes[i] is the
    number of distinct letters of source[positions[i]+1 .. positions[i+1]].
    """

    source: Word
    factor: Word
    positions: tuple[int, ...]
    gap_alphabet_sizes: tuple[int, ...]


def canonical_embedding(w: Word, u: Word) -> CanonicalEmbedding | None:
    """Leftmost embedding of u in w, or None when u is not a scattered factor."""
    require_same_alphabet(w, u)
    aut = build_automaton(w)
    positions: list[int] = []
    state = 0
    for a in u.symbols:
        state = aut.next(state, a)
        if state == NONE_POS:
            return None
        positions.append(state)
    gaps = []
    for lo, hi in zip(positions, positions[1:]):
        gaps.append(len(set(w.symbols[lo:hi])))
    return CanonicalEmbedding(w, u, tuple(positions), tuple(gaps))


def transfer_embedding(e: CanonicalEmbedding, target: Word) -> Word | None:
    """Replay a canonical embedding in another word over the same alphabet.

    Positions are mapped as j'_1 = j_1 and j'_{i+1} = next_alph_pos(target,
    j'_i, s_i); returns the word read off the target at those positions, or
    None when any step is undefined.
    """
    require_same_alphabet(e.source, target)
    if not e.positions:
        return Word(target.alphabet, ())
    j = e.positions[0]
    if j > len(target):
        return None
    out = [target.symbols[j - 1]]
    for s in e.gap_alphabet_sizes:
        j = next_alph_pos(target, j, s)
        if j == NONE_POS:
            return None
        out.append(target.symbols[j - 1])
    return Word(target.alphabet, tuple(out))


def simon_congruent(w: Word, v: Word, k: int) -> bool:
    """True iff ScatFact_l(w) = ScatFact_l(v) for every l <= k.

    Bounded bisimulation over automaton state pairs, computed bottom-up:
    EQ_0 is universally true; EQ_d(i,j) holds iff for every symbol the two
    transitions are both undefined or both defined with EQ_{d-1} at the
    successor pair.  The layer sequence is monotone decreasing, so a
    fixpoint ends the iteration early; the answer is EQ_k(0,0).
    """
    require_same_alphabet(w, v)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True
    aw = build_automaton(w).as_array()
    av = build_automaton(v).as_array()
    sigma = w.alphabet.size
    defined_w = aw != NONE_POS
    defined_v = av != NONE_POS
    safe_w = np.where(defined_w, aw, 0)
    safe_v = np.where(defined_v, av, 0)
    eq = np.ones((len(w) + 1, len(v) + 1), dtype=bool)
    for _ in range(k):
        nxt = np.ones_like(eq)
        for a in range(sigma):
            dw = defined_w[:, a][:, None]
            dv = defined_v[None, :, a]
            follow = eq[safe_w[:, a][:, None], safe_v[None, :, a]]
            nxt &= (~dw & ~dv) | (dw & dv & follow)
        if not nxt[0, 0]:
            return False
        if np.array_equal(nxt, eq):
            return True
        eq = nxt
    return bool(eq[0, 0])

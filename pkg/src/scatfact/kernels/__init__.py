"""Exhaustive sweep kernels with selectable backends.

Two backends implement the same three primitives:

* ``numba`` — @njit compiled loops (default when numba imports cleanly)
* ``numpy`` — pure-vectorized fallback

Selection: the ``SCATFACT_BACKEND`` environment variable ("numba" or
"numpy") picks the default; every public entry point also takes an
explicit ``backend=`` argument that wins over the environment.

The primitives:

* plain sweep — walk every word over sigma letters up to a length bound,
  tracking the counting DP row and arch state per word.
* merged sweep — breadth-first over words by length, but on equivalence
  classes: two prefixes that share (arches completed, current DP row,
  multiset of per-letter (last-occurrence DP row, seen-in-arch flag))
  have identical futures for both iota and |ScatFact_k|, so they merge.
  This keeps sweeps exhaustive far beyond per-word enumeration reach.
* dedupe — exact duplicate removal on packed 2-word states.

Merged states pack into 2 int64s (fields never straddle words; at most 63
bits used per word); packing feasibility is checked up front.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ..words import GuardExceeded

ENV_VAR = "SCATFACT_BACKEND"
ARCH_BITS = 6  # supports iota up to 63
PLAIN_AUTO_CUTOFF = 1 << 22  # switch to the merged sweep above ~4M words
PLAIN_HARD_GUARD = 2 * 10**8
VALUE_GUARD = 1 << 62

_BACKENDS: dict[str, object] = {}


def _load_backends() -> None:
    if _BACKENDS:
        return
    from . import numpy_impl

    _BACKENDS["numpy"] = numpy_impl
    try:
        from . import numba_impl

        _BACKENDS["numba"] = numba_impl
    except ImportError:
        pass


def available_backends() -> tuple[str, ...]:
    _load_backends()
    return tuple(sorted(_BACKENDS))


def resolve_backend(name: str | None = None):
    """Pick a backend module: explicit arg > env var > numba > numpy."""
    _load_backends()
    if name is None:
        name = os.environ.get(ENV_VAR)
    if name is None:
        name = "numba" if "numba" in _BACKENDS else "numpy"
    if name not in _BACKENDS:
        raise ValueError(
            f"unknown backend {name!r}; available: {', '.join(sorted(_BACKENDS))}"
        )
    return _BACKENDS[name]


@dataclass(frozen=True)
class MergedLayout:
    """Bit layout of one packed merged-sweep state (2 int64 words)."""

    sigma: int
    iota: int
    k: int
    wbits: np.ndarray  # [k+1] bit width of a count value c_j, j >= 1
    wmask: np.ndarray  # [k+1]
    cur_off: np.ndarray  # [k+1] offset of c_j inside the meta field
    eoff: np.ndarray  # [k+1] offset of e_j inside a block field
    seen_off: int
    block_width: int
    block_mask: int
    blk_word: np.ndarray  # [sigma] which word holds block slot b
    blk_off: np.ndarray  # [sigma] bit offset of block slot b


def build_merged_layout(sigma: int, iota: int, k: int) -> MergedLayout:
    if sigma**k >= VALUE_GUARD:
        raise GuardExceeded(f"sigma^k = {sigma**k} too large for int64 kernels")
    if iota >= (1 << ARCH_BITS):
        raise GuardExceeded(f"iota = {iota} exceeds kernel limit {(1 << ARCH_BITS) - 1}")
    wbits = np.zeros(k + 1, dtype=np.int64)
    for j in range(1, k + 1):
        wbits[j] = (sigma**j).bit_length()
    cur_width = int(wbits.sum())
    meta_width = ARCH_BITS + cur_width
    block_width = 2 + cur_width  # e0 bit + e_1..e_k + seen bit
    if meta_width > 63 or block_width > 63:
        raise GuardExceeded(
            f"merged state fields too wide (meta {meta_width}, block {block_width} bits)"
        )
    cur_off = np.zeros(k + 1, dtype=np.int64)
    eoff = np.zeros(k + 1, dtype=np.int64)
    off = ARCH_BITS
    for j in range(1, k + 1):
        cur_off[j] = off
        eoff[j] = 1 + (off - ARCH_BITS)
        off += int(wbits[j])
    seen_off = 1 + cur_width
    blk_word = np.zeros(sigma, dtype=np.int64)
    blk_off = np.zeros(sigma, dtype=np.int64)
    cursors = [meta_width, 0]
    for b in range(sigma):
        if cursors[0] + block_width <= 63:
            blk_word[b], blk_off[b] = 0, cursors[0]
            cursors[0] += block_width
        elif cursors[1] + block_width <= 63:
            blk_word[b], blk_off[b] = 1, cursors[1]
            cursors[1] += block_width
        else:
            raise GuardExceeded(
                f"merged state does not fit 2 words (sigma={sigma}, k={k})"
            )
    wmask = np.zeros(k + 1, dtype=np.int64)
    for j in range(1, k + 1):
        wmask[j] = (1 << int(wbits[j])) - 1
    return MergedLayout(
        sigma=sigma,
        iota=iota,
        k=k,
        wbits=wbits,
        wmask=wmask,
        cur_off=cur_off,
        eoff=eoff,
        seen_off=seen_off,
        block_width=block_width,
        block_mask=(1 << block_width) - 1,
        blk_word=blk_word,
        blk_off=blk_off,
    )


def merged_sweep_max(
    sigma: int, iota: int, k: int, max_len: int, backend: str | None = None
) -> np.ndarray:
    """Per-length maxima of |ScatFact_k| over ALL words with iota(w)=iota.

    Exhaustive over every word of each length up to max_len via merged
    states; entry [l] is the maximum at length l, or -1 when no word of
    length l has the requested iota.
    """
    impl = resolve_backend(backend)
    lay = build_merged_layout(sigma, iota, k)
    best = np.full(max_len + 1, -1, dtype=np.int64)
    if iota == 0:
        best[0] = 1 if k == 0 else 0
    states = np.zeros((1, 2), dtype=np.int64)
    for level in range(max_len):
        remaining = max_len - (level + 1)
        children, lvl_best = impl.merged_expand(
            states,
            remaining,
            sigma,
            iota,
            k,
            lay.wmask,
            lay.cur_off,
            lay.eoff,
            lay.seen_off,
            lay.block_mask,
            lay.blk_word,
            lay.blk_off,
        )
        best[level + 1] = lvl_best
        if children.shape[0] == 0:
            break
        states = impl.dedupe_pairs(children)
    return best


def plain_sweep_max(
    sigma: int, iota: int, k: int, max_len: int, backend: str | None = None
) -> np.ndarray:
    """Per-length maxima of |ScatFact_k| by walking every word individually."""
    _check_plain(sigma, max_len, sigma**k)
    impl = resolve_backend(backend)
    return impl.dfs_sweep_max(sigma, iota, k, max_len)


def sweep_max_at_k(
    sigma: int,
    iota: int,
    k: int,
    max_len: int,
    backend: str | None = None,
    method: str = "auto",
) -> np.ndarray:
    """Exhaustive per-length maxima of |ScatFact_k| over iota-words.

    method: "plain" walks words one by one, "merged" uses state merging,
    "auto" picks plain for small spaces and merged beyond.
    """
    if method == "auto":
        total = sum(sigma**length for length in range(max_len + 1))
        method = "plain" if total <= PLAIN_AUTO_CUTOFF else "merged"
    if method == "plain":
        return plain_sweep_max(sigma, iota, k, max_len, backend)
    if method == "merged":
        return merged_sweep_max(sigma, iota, k, max_len, backend)
    raise ValueError(f"unknown method {method!r}")


def sweep_dominates(
    sigma: int,
    iota: int,
    kmax: int,
    max_len: int,
    ref_counts,
    backend: str | None = None,
) -> tuple[int, list[tuple[int, ...]]]:
    """Check ref_counts[j] <= counts(w')[j] for all j<=kmax over every iota-word.

    Walks all words up to max_len with iota(w')=iota; returns the number of
    words checked and the violating words (as symbol tuples, at most 16).
    """
    _check_plain(sigma, max_len, sigma**kmax)
    impl = resolve_backend(backend)
    ref = np.asarray(ref_counts, dtype=np.int64)
    if ref.shape[0] != kmax + 1:
        raise ValueError(f"ref_counts must have length kmax+1 = {kmax + 1}")
    checked, nviol, words, lens = impl.dfs_sweep_dominates(sigma, iota, kmax, max_len, ref)
    witnesses = [tuple(int(s) for s in words[i, : lens[i]]) for i in range(nviol)]
    return int(checked), witnesses


def _check_plain(sigma: int, max_len: int, top_value: int) -> None:
    if top_value >= VALUE_GUARD:
        raise GuardExceeded(f"count values up to {top_value} overflow int64 kernels")
    total = sum(sigma**length for length in range(max_len + 1))
    if total > PLAIN_HARD_GUARD:
        raise GuardExceeded(
            f"plain sweep over {total} words exceeds guard {PLAIN_HARD_GUARD}; "
            "use the merged method"
        )


def warm_up(backend: str | None = None) -> None:
    """Compile/exercise every kernel once on trivial inputs."""
    sweep_max_at_k(2, 1, 2, 3, backend=backend, method="plain")
    sweep_max_at_k(2, 1, 2, 3, backend=backend, method="merged")
    sweep_dominates(2, 1, 2, 3, [1, 2, 3], backend=backend)

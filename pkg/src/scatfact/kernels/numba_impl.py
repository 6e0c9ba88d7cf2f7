"""Numba backend: @njit versions of the sweep primitives."""

from __future__ import annotations

import numpy as np
from numba import njit

numba_kwargs = {"cache": True, "nogil": True}

_MIX1 = np.uint64(0x9E3779B97F4A7C15)
_MIX2 = np.uint64(0xFF51AFD7ED558CCD)
_SH33 = np.uint64(33)


@njit(**numba_kwargs)
def _popcount(x: np.int64, nbits: np.int64) -> np.int64:
    c = 0
    for b in range(nbits):
        c += (x >> b) & 1
    return c


@njit(**numba_kwargs)
def dfs_sweep_max(sigma, iota, k, max_len):
    """Max of counts[k] per word length over all words with iota(w)=iota.

    Depth-first walk over every word up to max_len; per-depth stacks hold
    the counting-DP row, the per-letter last-occurrence rows, the seen
    mask, and the arch count.  Subtrees that exceed iota or cannot reach
    it within the length budget are skipped whole.
    """
    best = np.full(max_len + 1, -1, dtype=np.int64)
    if iota == 0:
        best[0] = 1 if k == 0 else 0
    choice = np.full(max_len + 1, -1, dtype=np.int64)
    cur = np.zeros((max_len + 1, k + 1), dtype=np.int64)
    cur[0, 0] = 1
    erows = np.zeros((max_len + 1, sigma, k + 1), dtype=np.int64)
    seen = np.zeros(max_len + 1, dtype=np.int64)
    arch = np.zeros(max_len + 1, dtype=np.int64)
    full = (1 << sigma) - 1
    d = 0
    while d >= 0:
        c = choice[d] + 1
        if c == sigma:
            choice[d] = -1
            d -= 1
            continue
        choice[d] = c
        ns = seen[d] | (1 << c)
        na = arch[d]
        if ns == full:
            na += 1
            ns = 0
        if na > iota:
            continue
        for j in range(k + 1):
            cur[d + 1, j] = cur[d, j]
        for j in range(1, k + 1):
            cur[d + 1, j] = cur[d, j] + cur[d, j - 1] - erows[d, c, j - 1]
        for s in range(sigma):
            for j in range(k + 1):
                erows[d + 1, s, j] = erows[d, s, j]
        for j in range(k + 1):
            erows[d + 1, c, j] = cur[d, j]
        seen[d + 1] = ns
        arch[d + 1] = na
        if na == iota and cur[d + 1, k] > best[d + 1]:
            best[d + 1] = cur[d + 1, k]
        if d + 1 < max_len:
            if na < iota:
                need = (sigma - _popcount(ns, sigma)) + (iota - na - 1) * sigma
                if (d + 1) + need > max_len:
                    continue
            d += 1
    return best


@njit(**numba_kwargs)
def dfs_sweep_dominates(sigma, iota, kmax, max_len, ref):
    """Check ref[j] <= counts(w')[j] for all j over every iota-word.

    Returns (words checked, violation count, witness words, witness lengths);
    at most 16 witnesses are recorded.
    """
    checked = np.int64(0)
    nviol = 0
    wit = np.zeros((16, max_len), dtype=np.int64)
    witlen = np.zeros(16, dtype=np.int64)
    choice = np.full(max_len + 1, -1, dtype=np.int64)
    cur = np.zeros((max_len + 1, kmax + 1), dtype=np.int64)
    cur[0, 0] = 1
    erows = np.zeros((max_len + 1, sigma, kmax + 1), dtype=np.int64)
    seen = np.zeros(max_len + 1, dtype=np.int64)
    arch = np.zeros(max_len + 1, dtype=np.int64)
    full = (1 << sigma) - 1
    d = 0
    while d >= 0:
        c = choice[d] + 1
        if c == sigma:
            choice[d] = -1
            d -= 1
            continue
        choice[d] = c
        ns = seen[d] | (1 << c)
        na = arch[d]
        if ns == full:
            na += 1
            ns = 0
        if na > iota:
            continue
        for j in range(kmax + 1):
            cur[d + 1, j] = cur[d, j]
        for j in range(1, kmax + 1):
            cur[d + 1, j] = cur[d, j] + cur[d, j - 1] - erows[d, c, j - 1]
        for s in range(sigma):
            for j in range(kmax + 1):
                erows[d + 1, s, j] = erows[d, s, j]
        for j in range(kmax + 1):
            erows[d + 1, c, j] = cur[d, j]
        seen[d + 1] = ns
        arch[d + 1] = na
        if na == iota:
            checked += 1
            ok = True
            for j in range(kmax + 1):
                if ref[j] > cur[d + 1, j]:
                    ok = False
                    break
            if not ok:
                if nviol < 16:
                    for t in range(d + 1):
                        wit[nviol, t] = choice[t]
                    witlen[nviol] = d + 1
                nviol += 1
        if d + 1 < max_len:
            if na < iota:
                need = (sigma - _popcount(ns, sigma)) + (iota - na - 1) * sigma
                if (d + 1) + need > max_len:
                    continue
            d += 1
    return checked, nviol, wit, witlen


@njit(**numba_kwargs)
def merged_expand(
    states,
    remaining,
    sigma,
    iota,
    k,
    wmask,
    cur_off,
    eoff,
    seen_off,
    block_mask,
    blk_word,
    blk_off,
):
    """Expand one merged-BFS level by appending each distinct letter class.

    states is (N, 2) packed int64; returns (children, best) where best is
    the max c[k] among children with exactly iota arches (-1 when none).
    Children are not stored when remaining == 0 since nothing expands them.
    """
    n = states.shape[0]
    out = np.empty((n * sigma, 2), dtype=np.int64)
    m = 0
    best = np.int64(-1)
    seen_bit = np.int64(1) << seen_off
    c = np.empty(k + 1, dtype=np.int64)
    nc = np.empty(k + 1, dtype=np.int64)
    e = np.empty(k + 1, dtype=np.int64)
    bvals = np.empty(sigma, dtype=np.int64)
    nb = np.empty(sigma, dtype=np.int64)
    for i in range(n):
        w0 = states[i, 0]
        w1 = states[i, 1]
        archc = w0 & 63
        c[0] = 1
        for j in range(1, k + 1):
            c[j] = (w0 >> cur_off[j]) & wmask[j]
        seen_tot = 0
        for b in range(sigma):
            src = w0 if blk_word[b] == 0 else w1
            bvals[b] = (src >> blk_off[b]) & block_mask
            seen_tot += (bvals[b] >> seen_off) & 1
        for b in range(sigma):
            if b > 0 and bvals[b] == bvals[b - 1]:
                continue
            bb = bvals[b]
            seen_b = (bb >> seen_off) & 1
            completes = seen_b == 0 and seen_tot == sigma - 1
            narch = archc + (1 if completes else 0)
            if narch > iota:
                continue
            e[0] = bb & 1
            for j in range(1, k + 1):
                e[j] = (bb >> eoff[j]) & wmask[j]
            nc[0] = 1
            for j in range(1, k + 1):
                nc[j] = c[j] + c[j - 1] - e[j - 1]
            nbv = np.int64(1)
            for j in range(1, k + 1):
                nbv |= c[j] << eoff[j]
            for t in range(sigma):
                nb[t] = bvals[t]
            nb[b] = nbv
            if completes:
                for t in range(sigma):
                    nb[t] = nb[t] & ~seen_bit
            else:
                nb[b] = nbv | seen_bit
            if narch < iota:
                scnt = 0
                for t in range(sigma):
                    scnt += (nb[t] >> seen_off) & 1
                need = (sigma - scnt) + (iota - narch - 1) * sigma
                if need > remaining:
                    continue
            if narch == iota and nc[k] > best:
                best = nc[k]
            if remaining == 0:
                continue
            # insertion sort keeps the block multiset canonical
            for t in range(1, sigma):
                v = nb[t]
                u = t - 1
                while u >= 0 and nb[u] > v:
                    nb[u + 1] = nb[u]
                    u -= 1
                nb[u + 1] = v
            cw0 = narch
            for j in range(1, k + 1):
                cw0 |= nc[j] << cur_off[j]
            cw1 = np.int64(0)
            for t in range(sigma):
                if blk_word[t] == 0:
                    cw0 |= nb[t] << blk_off[t]
                else:
                    cw1 |= nb[t] << blk_off[t]
            out[m, 0] = cw0
            out[m, 1] = cw1
            m += 1
    return out[:m], best


@njit(**numba_kwargs)
def dedupe_pairs(arr):
    """Exact dedup of (N, 2) int64 rows via open-addressing hashing."""
    n = arr.shape[0]
    cap = 1
    while cap < 2 * n + 2:
        cap <<= 1
    mask = np.uint64(cap - 1)
    k0 = np.empty(cap, dtype=np.int64)
    k1 = np.empty(cap, dtype=np.int64)
    used = np.zeros(cap, dtype=np.uint8)
    out = np.empty((n, 2), dtype=np.int64)
    u = 0
    for i in range(n):
        a = arr[i, 0]
        b = arr[i, 1]
        h = np.uint64(a) ^ (np.uint64(b) * _MIX1)
        h ^= h >> _SH33
        h *= _MIX2
        h ^= h >> _SH33
        slot = np.int64(h & mask)
        while True:
            if used[slot] == 0:
                used[slot] = 1
                k0[slot] = a
                k1[slot] = b
                out[u, 0] = a
                out[u, 1] = b
                u += 1
                break
            if k0[slot] == a and k1[slot] == b:
                break
            slot = (slot + 1) & np.int64(mask)
    return out[:u]

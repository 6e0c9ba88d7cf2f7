"""Pure-numpy backend: vectorized versions of the sweep primitives.

Same function signatures and outputs as the numba backend; the plain
sweeps batch words per length instead of walking a DFS, the merged
expansion operates column-wise on packed state arrays.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 16


def _decode(idx: np.ndarray, sigma: int, length: int) -> np.ndarray:
    powers = sigma ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % sigma


def _batch_state(digits: np.ndarray, sigma: int, kk: int):
    """Arch count and counting-DP row for a batch of words (rows of digits)."""
    cnum, length = digits.shape
    cur = np.zeros((cnum, kk + 1), dtype=np.int64)
    cur[:, 0] = 1
    erows = np.zeros((cnum, sigma, kk + 1), dtype=np.int64)
    seen = np.zeros(cnum, dtype=np.int64)
    archc = np.zeros(cnum, dtype=np.int64)
    full = (1 << sigma) - 1
    rows = np.arange(cnum)
    for t in range(length):
        d = digits[:, t]
        ed = erows[rows, d]
        new = cur.copy()
        new[:, 1:] = cur[:, 1:] + cur[:, :-1] - ed[:, :-1]
        erows[rows, d] = cur
        cur = new
        seen |= 1 << d
        done = seen == full
        archc[done] += 1
        seen[done] = 0
    return archc, cur


def dfs_sweep_max(sigma, iota, k, max_len):
    best = np.full(max_len + 1, -1, dtype=np.int64)
    if iota == 0:
        best[0] = 1 if k == 0 else 0
    for length in range(1, max_len + 1):
        total = sigma**length
        mx = np.int64(-1)
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            archc, cur = _batch_state(_decode(idx, sigma, length), sigma, k)
            mask = archc == iota
            if mask.any():
                v = cur[mask, k].max()
                if v > mx:
                    mx = v
        best[length] = mx
    return best


def dfs_sweep_dominates(sigma, iota, kmax, max_len, ref):
    checked = 0
    nviol = 0
    wit = np.zeros((16, max(max_len, 1)), dtype=np.int64)
    witlen = np.zeros(16, dtype=np.int64)
    for length in range(1, max_len + 1):
        total = sigma**length
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            digits = _decode(idx, sigma, length)
            archc, cur = _batch_state(digits, sigma, kmax)
            mask = archc == iota
            checked += int(mask.sum())
            viol = mask & (cur < ref[None, :]).any(axis=1)
            for i in np.nonzero(viol)[0]:
                if nviol < 16:
                    wit[nviol, :length] = digits[i]
                    witlen[nviol] = length
                nviol += 1
    return checked, nviol, wit, witlen


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
    n = states.shape[0]
    w0 = states[:, 0]
    w1 = states[:, 1]
    archc = w0 & 63
    cs = [np.ones(n, dtype=np.int64)]
    for j in range(1, k + 1):
        cs.append((w0 >> int(cur_off[j])) & int(wmask[j]))
    bmat = np.empty((n, sigma), dtype=np.int64)
    for b in range(sigma):
        src = w0 if blk_word[b] == 0 else w1
        bmat[:, b] = (src >> int(blk_off[b])) & block_mask
    seen_bit = 1 << seen_off
    seen_bits = (bmat >> seen_off) & 1
    seen_tot = seen_bits.sum(axis=1)
    parts = []
    best = np.int64(-1)
    for b in range(sigma):
        bb = bmat[:, b]
        dup = (bb == bmat[:, b - 1]) if b > 0 else np.zeros(n, dtype=bool)
        seen_b = seen_bits[:, b]
        completes = (seen_b == 0) & (seen_tot == sigma - 1)
        narch = archc + completes
        keep = ~dup & (narch <= iota)
        es = [bb & 1]
        for j in range(1, k + 1):
            es.append((bb >> int(eoff[j])) & int(wmask[j]))
        ncs = [cs[0]]
        for j in range(1, k + 1):
            ncs.append(cs[j] + cs[j - 1] - es[j - 1])
        nbv = np.ones(n, dtype=np.int64)
        for j in range(1, k + 1):
            nbv |= cs[j] << int(eoff[j])
        base = bmat.copy()
        base[:, b] = nbv
        cleared = base & ~seen_bit
        withset = base.copy()
        withset[:, b] = nbv | seen_bit
        nbmat = np.where(completes[:, None], cleared, withset)
        scnt = ((nbmat >> seen_off) & 1).sum(axis=1)
        need = (sigma - scnt) + (iota - narch - 1) * sigma
        keep &= (narch == iota) | (need <= remaining)
        at_iota = keep & (narch == iota)
        if at_iota.any():
            v = ncs[k][at_iota].max()
            if v > best:
                best = v
        if remaining == 0:
            continue
        nbmat = np.sort(nbmat, axis=1)
        cw0 = narch.astype(np.int64)
        for j in range(1, k + 1):
            cw0 = cw0 | (ncs[j] << int(cur_off[j]))
        cw1 = np.zeros(n, dtype=np.int64)
        for t in range(sigma):
            shifted = nbmat[:, t] << int(blk_off[t])
            if blk_word[t] == 0:
                cw0 = cw0 | shifted
            else:
                cw1 = cw1 | shifted
        parts.append(np.stack([cw0, cw1], axis=1)[keep])
    if parts:
        children = np.concatenate(parts, axis=0)
    else:
        children = np.empty((0, 2), dtype=np.int64)
    return children, best


def dedupe_pairs(arr):
    if arr.shape[0] == 0:
        return arr
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    srt = arr[order]
    keep = np.ones(srt.shape[0], dtype=bool)
    keep[1:] = (srt[1:] != srt[:-1]).any(axis=1)
    return srt[keep]

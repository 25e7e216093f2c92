"""Pure-Python / numpy kernels.

This is the reference implementation of the hot loops: plain-integer
Games-Chan folding and cost-propagation k-error folding for single calls,
numpy-vectorized variants for bulk scans.  The compiled twin in ``fast.pyx``
implements the same contracts; either backend must produce identical results.

Sequence words pack bit i = s_i with s_0 in the least significant position.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

PARITY_ALL, PARITY_EVEN, PARITY_ODD = 0, 1, 2


def lc_int(word: int, n: int) -> int:
    """Games-Chan linear complexity of a packed 2^n-bit word."""
    if word == 0:
        return 0
    length = 0
    for level in range(n, 0, -1):
        h = 1 << (level - 1)
        left = word & ((1 << h) - 1)
        right = word >> h
        diff = left ^ right
        if diff:
            length += h
            word = diff
        else:
            word = left
    if word:
        length += 1
    return length


def klc_int(word: int, n: int, k: int) -> int:
    """k-error linear complexity by cost propagation.

    A per-position flip-cost vector is folded in lockstep with the sequence.
    When the two halves can be equalized within budget, that branch is taken
    (it never loses: the equalized half yields at most 2^(n-1), the other
    branch at least that).  Disagreeing positions merge to the costlier
    copy's value and keep the cost difference as the future flip price, so
    equal-cost ties leave a free flip behind.
    """
    size = 1 << n
    cost = [1] * size
    length = 0
    while size > 1:
        h = size >> 1
        left = word & ((1 << h) - 1)
        right = word >> h
        diff = left ^ right
        total = 0
        d = diff
        while d:
            i = (d & -d).bit_length() - 1
            ci, ch = cost[i], cost[i + h]
            total += ci if ci < ch else ch
            d &= d - 1
        if total <= k:
            k -= total
            new_word = 0
            new_cost = [0] * h
            for i in range(h):
                ci, ch = cost[i], cost[i + h]
                if (diff >> i) & 1:
                    if ci <= ch:
                        bit = (right >> i) & 1
                        new_cost[i] = ch - ci
                    else:
                        bit = (left >> i) & 1
                        new_cost[i] = ci - ch
                else:
                    bit = (left >> i) & 1
                    new_cost[i] = ci + ch
                if bit:
                    new_word |= 1 << i
            word = new_word
            cost = new_cost
        else:
            length += h
            word = diff
            cost = [min(cost[i], cost[i + h]) for i in range(h)]
        size = h
    if word and cost[0] > k:
        length += 1
    return length


def lc_batch(words: np.ndarray, n: int) -> np.ndarray:
    """Vectorized Games-Chan over an array of uint64 words (n <= 6)."""
    w = words.astype(np.uint64, copy=True)
    length = np.zeros(w.shape, dtype=np.int64)
    for level in range(n, 0, -1):
        h = 1 << (level - 1)
        mask = np.uint64((1 << h) - 1)
        left = w & mask
        right = w >> np.uint64(h)
        diff = left ^ right
        nz = diff != np.uint64(0)
        length[nz] += h
        w = np.where(nz, diff, left)
    length[w != np.uint64(0)] += 1
    return length


def _parity_select(words: np.ndarray, parity: int) -> np.ndarray:
    if parity == PARITY_ALL:
        return words
    pc = np.bitwise_count(words)
    want = 0 if parity == PARITY_EVEN else 1
    return words[(pc & 1) == want]


def scan_klc_spectrum(
    n: int, k: int, parity: int, start: int, stop: int, hist: np.ndarray
) -> None:
    """Histogram k-error linear complexity over the word range [start, stop)."""
    for w in range(start, stop):
        pc = w.bit_count()
        if parity == PARITY_EVEN and pc & 1:
            continue
        if parity == PARITY_ODD and not pc & 1:
            continue
        if pc <= k:
            hist[0] += 1
        else:
            hist[klc_int(w, n, k)] += 1


def scan_min_spectrum(
    n: int,
    parity: int,
    patterns: np.ndarray,
    start: int,
    stop: int,
    hist: np.ndarray,
) -> None:
    """Histogram min-over-patterns linear complexity over [start, stop).

    For each word w the binned value is min_e lc(w ^ e) over the supplied
    pattern words, i.e. brute-force k-error complexity when ``patterns``
    enumerates an error ball.
    """
    period = 1 << n
    chunk = 1 << 16
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        words = _parity_select(np.arange(lo, hi, dtype=np.uint64), parity)
        if words.size == 0:
            continue
        best = np.full(words.shape, period + 1, dtype=np.int64)
        for e in patterns:
            np.minimum(best, lc_batch(words ^ np.uint64(e), n), out=best)
        hist += np.bincount(best, minlength=period + 1)[: period + 1]


def min_lc_over_patterns(word: int, n: int, patterns: np.ndarray) -> int:
    vals = lc_batch(np.uint64(word) ^ patterns.astype(np.uint64), n)
    return int(vals.min())


def klc_profile_scan(
    n: int,
    words: np.ndarray,
    patterns: np.ndarray,
    weights: np.ndarray,
    kmax: int,
    out: np.ndarray,
) -> None:
    """Brute-force k-error complexities for k = 0..kmax, one row per word.

    ``patterns`` must be sorted by ascending weight and cover every weight
    class 0..kmax that exists; ``weights[i]`` is the weight of pattern i.
    """
    pats = patterns.astype(np.uint64, copy=False)
    wts = np.asarray(weights, dtype=np.int64)
    starts = np.flatnonzero(np.r_[True, wts[1:] != wts[:-1]])
    group_w = wts[starts]
    period = 1 << n
    for idx in range(words.shape[0]):
        vals = lc_batch(np.uint64(words[idx]) ^ pats, n)
        gmin = np.minimum.reduceat(vals, starts)
        best = period + 1
        gi = 0
        for k in range(kmax + 1):
            while gi < group_w.shape[0] and group_w[gi] <= k:
                if gmin[gi] < best:
                    best = int(gmin[gi])
                gi += 1
            out[idx, k] = best


def census_scan(n: int, weight: int, hist: np.ndarray) -> None:
    """Histogram plain linear complexity over all words of the given weight."""
    period = 1 << n
    if weight == 0:
        hist[0] += 1
        return
    if n <= 6:
        combos = itertools.combinations(range(period), weight)
        while True:
            block = list(itertools.islice(combos, 1 << 15))
            if not block:
                break
            arr = np.array(block, dtype=np.uint64)
            words = np.bitwise_or.reduce(np.left_shift(np.uint64(1), arr), axis=1)
            hist += np.bincount(lc_batch(words, n), minlength=period + 1)[
                : period + 1
            ]
    else:
        for support in itertools.combinations(range(period), weight):
            word = 0
            for i in support:
                word |= 1 << i
            hist[lc_int(word, n)] += 1


def population(n: int, parity: int) -> int:
    if parity == PARITY_ALL:
        return 1 << (1 << n)
    return 1 << ((1 << n) - 1)


def binom_total(n: int, weight: int) -> int:
    return comb(1 << n, weight)

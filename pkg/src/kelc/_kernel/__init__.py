"""Kernel backend selection.

The compiled extension handles periods up to 64 bits; anything longer (or a
missing/disabled extension) falls back to the pure implementation.  Set
``KELC_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import pure
from .pure import PARITY_ALL, PARITY_EVEN, PARITY_ODD

if os.environ.get("KELC_PURE"):
    _fast = None
else:
    try:
        from . import fast as _fast  # type: ignore[attr-defined]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

#: Largest period exponent the compiled word kernels accept.
WORD_N = 6


def lc(bits: int, n: int) -> int:
    if _fast is not None and n <= WORD_N:
        return _fast.lc_word(bits, n)
    return pure.lc_int(bits, n)


def klc(bits: int, n: int, k: int) -> int:
    if _fast is not None and n <= WORD_N:
        return _fast.klc_word(bits, n, k)
    return pure.klc_int(bits, n, k)


def min_lc_over_patterns(bits: int, n: int, patterns: np.ndarray) -> int:
    if _fast is not None and n <= WORD_N:
        return _fast.min_lc_over_patterns(bits, n, patterns)
    return pure.min_lc_over_patterns(bits, n, patterns)


def klc_spectrum_range(
    n: int, k: int, parity: int, start: int, stop: int
) -> np.ndarray:
    hist = np.zeros((1 << n) + 1, dtype=np.int64)
    if _fast is not None and n <= WORD_N:
        _fast.scan_klc_spectrum(n, k, parity, start, stop, hist)
    else:
        pure.scan_klc_spectrum(n, k, parity, start, stop, hist)
    return hist


def min_spectrum_range(
    n: int, parity: int, patterns: np.ndarray, start: int, stop: int
) -> np.ndarray:
    hist = np.zeros((1 << n) + 1, dtype=np.int64)
    if _fast is not None and n <= WORD_N:
        _fast.scan_min_spectrum(n, parity, patterns, start, stop, hist)
    else:
        pure.scan_min_spectrum(n, parity, patterns, start, stop, hist)
    return hist


def klc_profile_scan(
    n: int,
    words: np.ndarray,
    patterns: np.ndarray,
    weights: np.ndarray,
    kmax: int,
) -> np.ndarray:
    out = np.zeros((words.shape[0], kmax + 1), dtype=np.int64)
    if _fast is not None and n <= WORD_N:
        _fast.klc_profile_scan(n, words, patterns, weights, kmax, out)
    else:
        pure.klc_profile_scan(n, words, patterns, weights, kmax, out)
    return out


def census(n: int, weight: int) -> np.ndarray:
    hist = np.zeros((1 << n) + 1, dtype=np.int64)
    if _fast is not None and n <= WORD_N:
        _fast.census_scan(n, weight, hist, pure.binom_total(n, weight))
    else:
        pure.census_scan(n, weight, hist)
    return hist

"""Linear complexity and k-error linear complexity.

``linear_complexity`` is the Games-Chan fold; ``klc_fast`` propagates
per-position flip costs alongside the fold and runs in time linear in the
period; ``klc_exhaustive`` is the brute-force reference the fast path is
tested against (minimum over every error pattern of weight <= k).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernel
from .errors import FormulaError, OutOfRange, UndefinedForZero
from .seqcore import PeriodicSequence, error_patterns, pattern_count


@dataclass(frozen=True)
class ComplexityProfile:
    """k-error linear complexities L[0..K] plus the first-drop index.

    ``k_min`` is the smallest k with L_k < L_0; the zero sequence carries the
    sentinel 2^n + 1 (its complexity can never drop below 0).
    """

    n: int
    L: tuple[int, ...]
    k_min: int

    def __post_init__(self) -> None:
        period = 1 << self.n
        if any(not 0 <= v <= period for v in self.L):
            raise OutOfRange("complexity values outside [0, 2^n]")
        if any(a < b for a, b in zip(self.L, self.L[1:])):
            raise OutOfRange("profile must be non-increasing")


def linear_complexity(s: PeriodicSequence) -> int:
    """Degree of the minimal polynomial of one period.

    0 iff s is the zero sequence; 2^n iff the period weight is odd.
    """
    return _kernel.lc(s.bits, s.n)


def _check_k(s: PeriodicSequence, k: int) -> None:
    if not 0 <= k <= s.period:
        raise OutOfRange(f"k={k} outside [0, {s.period}]")


# Pattern tables above this size are streamed instead of materialized.
_MATERIALIZE_CAP = 1 << 23


@lru_cache(maxsize=8)
def _pattern_words(n: int, max_weight: int) -> np.ndarray:
    words = np.fromiter(
        (e.bits for e in error_patterns(n, max_weight)),
        dtype=np.uint64,
        count=pattern_count(n, max_weight),
    )
    return words


def klc_exhaustive(s: PeriodicSequence, k: int) -> int:
    """Reference oracle: min of linear_complexity(s ^ e) over weight(e) <= k."""
    _check_k(s, k)
    if k >= s.weight:
        return 0
    if s.n <= _kernel.WORD_N and pattern_count(s.n, k) <= _MATERIALIZE_CAP:
        return _kernel.min_lc_over_patterns(s.bits, s.n, _pattern_words(s.n, k))
    best = s.period + 1
    for e in error_patterns(s.n, k):
        v = _kernel.lc(s.bits ^ e.bits, s.n)
        if v < best:
            best = v
            if best == 0:
                break
    return best


def klc_fast(s: PeriodicSequence, k: int) -> int:
    """k-error linear complexity in time linear in the period.

    Agrees with ``klc_exhaustive`` on every input; the equivalence is pinned
    by the exhaustive test sweeps rather than trusted.
    """
    _check_k(s, k)
    if k >= s.weight:
        return 0
    return _kernel.klc(s.bits, s.n, k)


def kmin(s: PeriodicSequence) -> int:
    """Smallest k for which the k-error complexity drops below L(s).

    Computed as 2 raised to the number of set bits in 2^n - L(s).
    """
    if s.bits == 0:
        raise UndefinedForZero("k_min is undefined for the zero sequence")
    return 1 << (s.period - linear_complexity(s)).bit_count()


def profile(s: PeriodicSequence, K: int) -> ComplexityProfile:
    """Profile L[k] = klc_fast(s, k) for k = 0..K.

    Values beyond the sequence weight are padded with 0 (erasing every one
    is always enough).  For nonzero s the first observed drop is
    cross-checked against the closed-form k_min.
    """
    _check_k(s, K)
    w = s.weight
    upto = min(K, w)
    values = [klc_fast(s, k) for k in range(upto + 1)]
    values.extend([0] * (K - upto))
    if s.bits == 0:
        return ComplexityProfile(s.n, tuple(values), s.period + 1)
    k_min = kmin(s)
    if k_min <= K:
        if values[k_min] >= values[0] or (
            k_min > 0 and values[k_min - 1] != values[0]
        ):
            raise FormulaError(
                f"profile drop at k={k_min} inconsistent with closed form"
            )
    else:
        if any(v != values[0] for v in values):
            raise FormulaError("profile dropped before the closed-form k_min")
    return ComplexityProfile(s.n, tuple(values), k_min)

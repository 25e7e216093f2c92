"""Exact closed-form counts of sequences by 4- and 5-error linear complexity.

Every count is the size of a class of 2^n-periodic binary sequences with
even period weight (linear complexity below 2^n).  A complexity value L
decomposes uniquely as L = 2^n - 2^r + c with 2 <= r <= n and
1 <= c <= 2^(r-1) - 1; the arithmetic shape of c selects one of six
multiplier families, and the count is 2^(L-1) times a multiplier that
depends only on (r, m[, j]).  Multipliers are inclusion-exclusion sieves
over the ball of error patterns of weight 0, 2 or 4: each census term is a
separately named function so a transcription slip localizes to one term,
every division is asserted exact, and no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import FormulaError, InvalidBranch, MultipleMatch, OutOfRange, TooLarge

ZERO = "zero"
GENERIC = "generic"
F_BRANCH = "f"
G_BRANCH = "g"
H_BRANCH = "h"
P_BRANCH = "p"
Q_BRANCH = "q"
UNREACHABLE = "unreachable"


def binom(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0 or a < b (the sieve relies on this)."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def exact_div(value: int, divisor: int) -> int:
    q, rem = divmod(value, divisor)
    if rem:
        raise FormulaError(f"{value} is not divisible by {divisor}")
    return q


def scaled(value: int, t: int) -> int:
    """((2^t - 1) / 2^t) * value, exact by construction."""
    return exact_div(value, 1 << t) * ((1 << t) - 1)


def low_even_ball(t: int) -> int:
    """Number of length-2^t error patterns of weight 0, 2 or 4."""
    period = 1 << t
    return 1 + binom(period, 2) + binom(period, 4)


def rueppel_count(n: int, L: int) -> int:
    """Number of 2^n-periodic binary sequences with linear complexity L."""
    if not 0 <= L <= (1 << n):
        raise OutOfRange(f"L={L} outside [0, {1 << n}]")
    return 1 if L == 0 else 1 << (L - 1)


@dataclass(frozen=True)
class LDecomposition:
    """The unique (r, c) with L = 2^n - 2^r + c, 1 <= c <= 2^(r-1) - 1."""

    r: int
    c: int


def decompose(n: int, L: int) -> LDecomposition | None:
    """Split L as 2^n - 2^r + c, or None when no such (r, c) exists.

    2^n - L falls in exactly one interval (2^(r-1), 2^r); a power of two
    would force c = 0, which is outside the c range, so those L (including
    2^n - 1 and 2^n - 2) have no decomposition.
    """
    if not 1 <= L < (1 << n):
        raise OutOfRange(f"L={L} outside [1, {1 << n})")
    gap = (1 << n) - L
    if gap & (gap - 1) == 0:
        return None
    r = gap.bit_length()
    return LDecomposition(r=r, c=(1 << r) - gap)


@dataclass(frozen=True)
class Category:
    """Dispatch result: which multiplier family covers (n, L)."""

    kind: str
    r: int | None = None
    c: int | None = None
    m: int | None = None
    j: int | None = None
    x: int | None = None


def classify(n: int, L: int) -> Category:
    """Match (n, L) against every branch; exactly zero or one may fit."""
    if not 0 <= L < (1 << n):
        raise OutOfRange(f"L={L} outside [0, {1 << n})")
    if L == 0:
        return Category(ZERO)
    dec = decompose(n, L)
    if dec is None:
        return Category(UNREACHABLE)
    r, c = dec.r, dec.c
    matches = []
    if r > 3 and 1 <= c <= (1 << (r - 3)) - 1:
        matches.append(Category(GENERIC, r=r, c=c))
    if r > 2:
        for m in range(3, r + 1):
            if c == (1 << (r - 2)) - (1 << (r - m)):
                matches.append(Category(F_BRANCH, r=r, c=c, m=m))
    if r > 4:
        for m in range(3, r - 1):
            x = c - ((1 << (r - 2)) - (1 << (r - m)))
            if 0 < x < (1 << (r - m - 1)):
                matches.append(Category(G_BRANCH, r=r, c=c, m=m, x=x))
    for m in range(2, r + 1):
        if c == (1 << (r - 1)) - (1 << (r - m)):
            matches.append(Category(H_BRANCH, r=r, c=c, m=m))
    if r > 3:
        for m in range(3, r + 1):
            for j in range(m + 1, r + 1):
                if c == (1 << (r - 1)) - ((1 << (r - m)) + (1 << (r - j))):
                    matches.append(Category(P_BRANCH, r=r, c=c, m=m, j=j))
    # j == m is deliberately allowed: the two subtracted powers collapse to
    # 2^(r-m+1), covering the values just above a single-power point
    # (first needed at r=5, c=9).  Without it those L would count as zero
    # and the spectrum would not sum to the even-weight population.
    for m in range(3, r - 1):
        for j in range(m, r - 1):
            x = c - ((1 << (r - 1)) - ((1 << (r - m)) + (1 << (r - j))))
            if 0 < x < (1 << (r - j - 1)):
                matches.append(Category(Q_BRANCH, r=r, c=c, m=m, j=j, x=x))
    if len(matches) > 1:
        raise MultipleMatch(f"(n={n}, L={L}) matched {matches}")
    return matches[0] if matches else Category(UNREACHABLE)


# --- census terms for the c = 2^(r-2) - 2^(r-m) family -------------------
# Weight-4 patterns drawn from the eight ones of a quarter-period-aligned
# weight-8 sequence kill the complexity; overlapping draws are the C2 half.


def _c1(r: int, m: int) -> int:
    return (1 << (r + m - 6)) * binom(8, 4) - (1 << (r - 2)) * ((1 << (m - 3)) - 1)


def _c2(r: int, m: int) -> int:
    return ((1 << (r + m - 6)) - (1 << (r - 3))) * (binom(8, 4) - 2)


def f_mult(r: int, m: int) -> int:
    """Multiplier for L = 2^n - 2^r + c with c = 2^(r-2) - 2^(r-m)."""
    if not (2 < m <= r and r > 2):
        raise InvalidBranch(f"f_mult needs 2 < m <= r, r > 2; got r={r}, m={m}")
    return low_even_ball(r) - _c1(r, m) - exact_div(_c2(r, m), 2)


# --- census terms for c = 2^(r-2) - 2^(r-m) + x --------------------------
# Here nothing is killed outright; quarter-aligned four-tuples (D1) and
# draws from coarser weight-8 classes (D2) only merge duplicate sums.


def _d1(r: int) -> int:
    return 1 << (r - 2)


def _d2(r: int, m: int) -> int:
    return ((1 << (r + m - 5)) - (1 << (r - 3))) * (binom(8, 4) - 2)


def g_mult(r: int, m: int) -> int:
    """Multiplier for c = 2^(r-2) - 2^(r-m) + x; independent of x."""
    if not (2 < m < r - 1 and r > 4):
        raise InvalidBranch(f"g_mult needs 2 < m < r-1, r > 4; got r={r}, m={m}")
    return low_even_ball(r) - scaled(_d1(r), m - 2) - exact_div(_d2(r, m), 2)


# --- census terms for c = 2^(r-1) - 2^(r-m) ------------------------------
# One period splits into 2^(r-m) interleaved strides of length 2^m; the
# eight terms census weight-4 patterns by how their ones fall across
# strides and whether some pair sits a half period apart.


def _e1(r: int, m: int) -> int:
    return binom(1 << (r - m), 2) * binom(1 << m, 2) ** 2


def _e2(r: int, m: int) -> int:
    pairs = binom(1 << (m - 1), 2)
    return 4 * binom(1 << (r - m), 2) * pairs * pairs - binom(1 << (r - m), 2) * (
        (1 << (2 * m - 2)) + (1 << (m + 1)) * (pairs - (1 << (m - 2)))
    )


def _e3(r: int, m: int) -> int:
    return binom(1 << (r - m), 3) * 3 * binom(1 << m, 2) * (1 << m) * (1 << m)


def _e4(r: int, m: int) -> int:
    triples = binom(1 << (r - m), 3) * 3
    return triples * binom(1 << (m - 1), 2) * (1 << (2 * m + 1)) - triples * (
        1 << (3 * m - 1)
    )


def _e5(r: int, m: int) -> int:
    return binom(1 << (r - m), 2) * 2 * binom(1 << m, 3) * (1 << m)


def _e6(r: int, m: int) -> int:
    return (1 << (m + 2)) * binom(1 << (r - m), 2) * binom(1 << (m - 1), 3) - binom(
        1 << (r - m), 2
    ) * ((1 << (m - 1)) - 2) * (1 << (2 * m))


def _e7(r: int, m: int) -> int:
    return (1 << (r - m)) * binom(1 << m, 4)


def _e8(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 1), 4) - (
        (1 << (r - 1)) * binom((1 << (m - 1)) - 2, 2)
        - (1 << (r - m + 1)) * binom(1 << (m - 2), 2)
    )


def h_mult(r: int, m: int) -> int:
    """Multiplier for c = 2^(r-1) - 2^(r-m)."""
    if not (2 <= m <= r and r >= 2):
        raise InvalidBranch(f"h_mult needs 2 <= m <= r, r >= 2; got r={r}, m={m}")
    return (
        binom(1 << r, 4)
        - _e1(r, m)
        + exact_div(_e2(r, m), 4)
        - _e3(r, m)
        + exact_div(_e4(r, m), 2)
        - _e5(r, m)
        + exact_div(_e6(r, m), 4)
        - _e7(r, m)
        + exact_div(_e8(r, m), 8)
    )


# --- census terms for c = 2^(r-1) - (2^(r-m) + 2^(r-j)) ------------------
# F1..F8 census draws from weight-8 sequences of nearby complexities (the
# summation index k walks the classes between m and j); F9..F27 census the
# remaining patterns by stride occupancy, exactly as for the h family but
# over 2^(r-m+1) strides of length 2^(m-1).


def _f1(r: int, j: int) -> int:
    return (1 << (r - j)) * binom(1 << (j - 1), 2) - (1 << (r - j + 1)) * binom(
        1 << (j - 2), 2
    )


def _f2(r: int, m: int) -> int:
    return (1 << (r - m)) * binom(1 << (m - 1), 2) - (1 << (r - m + 1)) * binom(
        1 << (m - 2), 2
    )


def _f3(r: int, m: int, j: int) -> int:
    return exact_div(3 * (1 << (r + 2 * m + j - 6)), 1 << (m - 2))


def _f4(r: int, m: int, j: int) -> int:
    return (
        (1 << (r + 2 * m + j - 10)) * binom(8, 4)
        - ((1 << (2 * (m - 2))) - 1) * _f1(r, j)
        - ((1 << (m + j - 5)) - 1) * _f2(r, m)
        - ((1 << (m - 2)) - 1) * _f3(r, m, j)
    )


def _f5(r: int, m: int) -> int:
    # Same census as _f2; kept for one-to-one term coverage (unused below).
    return 1 << (r + m - 4)


def _f6(r: int, k: int) -> int:
    return 1 << (r + k - 4)


def _f7(r: int, m: int, k: int) -> int:
    return 3 * (1 << (r + m + k - 4))


def _f8(r: int, m: int, k: int) -> int:
    spread = sum(binom(4, i) for i in range(5))
    return (1 << (r + 2 * m + k - 10)) * spread


def _f9(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 1), 2)


def _f10(r: int) -> int:
    return 1 << (r - 1)


def _f11(r: int, m: int) -> int:
    return _f9(r, m) - _f10(r)


def _f12(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * 2 * binom(1 << (m - 1), 3) * (1 << (m - 1))


def _f13(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 2)
        * 2
        * (1 << (m - 2))
        * ((1 << (m - 1)) - 2)
        * (1 << (m - 1))
    )


def _f14(r: int, m: int) -> int:
    return _f12(r, m) - _f13(r, m)


def _f15(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * binom(1 << (m - 1), 2) ** 2


def _f16(r: int, m: int, j: int) -> int:
    return (
        _f15(r, m)
        - _f2(r, m)
        - sum((1 << (r + k - 4)) for k in range(m + 1, j + 1))
    )


def _f17(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 2)
        * 2
        * (1 << (m - 2))
        * (binom(1 << (m - 1), 2) - (1 << (m - 2)))
    )


def _f18(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * (binom(1 << (m - 1), 2) - (1 << (m - 2))) ** 2


def _f19(r: int, m: int, j: int) -> int:
    return _f16(r, m, j) - _f17(r, m) - _f18(r, m)


def _f20(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 3) * 3 * binom(1 << (m - 1), 2) * (1 << (2 * (m - 1)))
    )


def _f21(r: int, m: int, j: int) -> int:
    return _f20(r, m) - 3 * sum(
        (1 << (r + m + k - 4)) for k in range(m + 1, j + 1)
    )


def _f22(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 3)
        * 3
        * (binom(1 << (m - 1), 2) - (1 << (m - 2)))
        * (1 << (2 * (m - 1)))
    )


def _f23(r: int, m: int, j: int) -> int:
    return _f21(r, m, j) - _f22(r, m)


def _f24(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 1), 4)


def _f25(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 2), 2)


def _f26(r: int, m: int) -> int:
    return (
        (1 << (r - m + 1))
        * (1 << (m - 2))
        * (binom((1 << (m - 1)) - 2, 2) - ((1 << (m - 2)) - 1))
    )


def _f27(r: int, m: int) -> int:
    return _f24(r, m) - _f25(r, m) - _f26(r, m)


def p_mult(r: int, m: int, j: int) -> int:
    """Multiplier for c = 2^(r-1) - (2^(r-m) + 2^(r-j))."""
    if not (2 < m < j <= r and r > 3):
        raise InvalidBranch(
            f"p_mult needs 2 < m < j <= r, r > 3; got r={r}, m={m}, j={j}"
        )
    total = low_even_ball(r) - _f4(r, m, j)
    for k in range(m + 1, j):
        total -= scaled(_f6(r, k), 2 * m - 3)
        total -= scaled(_f7(r, m, k), m - 1)
        total -= exact_div(_f8(r, m, k), 2)
    total -= scaled(_f10(r), m - 2)
    total -= exact_div(_f11(r, m), 2)
    total -= _f13(r, m)
    total -= scaled(_f14(r, m), 2)
    total -= scaled(_f17(r, m), m - 1)
    total -= scaled(_f18(r, m), 2)
    total -= scaled(_f19(r, m, j), 2 * m - 4)
    total -= exact_div(_f22(r, m), 2)
    total -= scaled(_f23(r, m, j), m - 2)
    total -= _f25(r, m)
    total -= _f26(r, m)
    total -= scaled(_f27(r, m), 3)
    return total


# --- census terms for c = 2^(r-1) - (2^(r-m) + 2^(r-j)) + x --------------
# Structurally the same census as the p family, but every colliding draw
# merges duplicates instead of killing (the summation therefore includes
# k = j, and the half-aligned pairs G1 carry a fractional weight).


def _g1(r: int, m: int) -> int:
    return 1 << (r + m - 4)


def _g2(r: int, k: int) -> int:
    return 1 << (r + k - 4)


def _g3(r: int, m: int, k: int) -> int:
    return 3 * (1 << (r + m + k - 4))


def _g4(r: int, m: int, k: int) -> int:
    spread = sum(binom(4, i) for i in range(5))
    return (1 << (r + 2 * m + k - 10)) * spread


def _g5(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 1), 2)


def _g6(r: int) -> int:
    return 1 << (r - 1)


def _g7(r: int, m: int) -> int:
    return _g5(r, m) - _g6(r)


def _g8(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * 2 * binom(1 << (m - 1), 3) * (1 << (m - 1))


def _g9(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 2)
        * 2
        * (1 << (m - 2))
        * ((1 << (m - 1)) - 2)
        * (1 << (m - 1))
    )


def _g10(r: int, m: int) -> int:
    return _g8(r, m) - _g9(r, m)


def _g11(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * binom(1 << (m - 1), 2) ** 2


def _g12(r: int, m: int, j: int) -> int:
    return _g11(r, m) - (_g1(r, m) + sum(_g2(r, k) for k in range(m + 1, j + 1)))


def _g13(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 2)
        * 2
        * (1 << (m - 2))
        * (binom(1 << (m - 1), 2) - (1 << (m - 2)))
    )


def _g14(r: int, m: int) -> int:
    return binom(1 << (r - m + 1), 2) * (binom(1 << (m - 1), 2) - (1 << (m - 2))) ** 2


def _g15(r: int, m: int, j: int) -> int:
    return _g12(r, m, j) - _g13(r, m) - _g14(r, m)


def _g16(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 3) * 3 * binom(1 << (m - 1), 2) * (1 << (2 * (m - 1)))
    )


def _g17(r: int, m: int, j: int) -> int:
    return _g16(r, m) - 3 * sum(
        (1 << (r + m + k - 4)) for k in range(m + 1, j + 1)
    )


def _g18(r: int, m: int) -> int:
    return (
        binom(1 << (r - m + 1), 3)
        * 3
        * (binom(1 << (m - 1), 2) - (1 << (m - 2)))
        * (1 << (2 * (m - 1)))
    )


def _g19(r: int, m: int, j: int) -> int:
    return _g17(r, m, j) - _g18(r, m)


def _g20(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 1), 4)


def _g21(r: int, m: int) -> int:
    return (1 << (r - m + 1)) * binom(1 << (m - 2), 2)


def _g22(r: int, m: int) -> int:
    return (
        (1 << (r - m + 1))
        * (1 << (m - 2))
        * (binom((1 << (m - 1)) - 2, 2) - ((1 << (m - 2)) - 1))
    )


def _g23(r: int, m: int) -> int:
    return _g20(r, m) - _g21(r, m) - _g22(r, m)


def q_mult(r: int, m: int, j: int) -> int:
    """Multiplier for c = 2^(r-1) - (2^(r-m) + 2^(r-j)) + x; x drops out.

    j may equal m: the two powers collapse to 2^(r-m+1) and the same census
    covers the region just above a single-power point.  The k-summation runs
    through j (inclusive), one step further than in p_mult, because the
    class at k = j merges duplicates here instead of being killed.
    """
    if not 2 < m <= j < r - 1:
        raise InvalidBranch(
            f"q_mult needs 2 < m <= j < r-1; got r={r}, m={m}, j={j}"
        )
    total = low_even_ball(r) - scaled(_g1(r, m), m + j - 4)
    for k in range(m + 1, j + 1):
        total -= scaled(_g2(r, k), 2 * m - 3)
        total -= scaled(_g3(r, m, k), m - 1)
        total -= exact_div(_g4(r, m, k), 2)
    total -= scaled(_g6(r), m - 2)
    total -= exact_div(_g7(r, m), 2)
    total -= _g9(r, m)
    total -= scaled(_g10(r, m), 2)
    total -= scaled(_g13(r, m), m - 1)
    total -= scaled(_g14(r, m), 2)
    total -= scaled(_g15(r, m, j), 2 * m - 4)
    total -= exact_div(_g18(r, m), 2)
    total -= scaled(_g19(r, m, j), m - 2)
    total -= _g21(r, m)
    total -= _g22(r, m)
    total -= scaled(_g23(r, m), 3)
    return total


def weight8_count(n: int, m: int, j: int) -> int:
    """Number of weight-8 period-2^n sequences with complexity
    2^(n-1) - (2^(n-m) + 2^(n-j))."""
    if not (n > 3 and 2 < m < j <= n):
        raise InvalidBranch(
            f"weight8_count needs n > 3, 2 < m < j <= n; got n={n}, m={m}, j={j}"
        )
    return 1 << (n + 2 * m + j - 10)


def n4_count(n: int, L: int) -> int:
    """Number of even-weight 2^n-periodic sequences with 4-error
    linear complexity exactly L."""
    if n < 2:
        raise OutOfRange(f"n={n} must be at least 2")
    if not 0 <= L < (1 << n):
        raise OutOfRange(f"L={L} outside [0, {1 << n})")
    cat = classify(n, L)
    if cat.kind == ZERO:
        return low_even_ball(n)
    if cat.kind == UNREACHABLE:
        return 0
    lead = 1 << (L - 1)
    if cat.kind == GENERIC:
        return lead * low_even_ball(cat.r)
    if cat.kind == F_BRANCH:
        return lead * f_mult(cat.r, cat.m)
    if cat.kind == G_BRANCH:
        return lead * g_mult(cat.r, cat.m)
    if cat.kind == H_BRANCH:
        return lead * h_mult(cat.r, cat.m)
    if cat.kind == P_BRANCH:
        return lead * p_mult(cat.r, cat.m, cat.j)
    return lead * q_mult(cat.r, cat.m, cat.j)


def n5_count(n: int, L: int) -> int:
    """Identical to n4_count: on the even-weight population an even error
    budget and the next odd one reach the same minimum."""
    return n4_count(n, L)


@dataclass(frozen=True)
class CountingTable:
    """Counts for every L in [0, 2^n): rows[L] = number of sequences."""

    n: int
    k: int
    rows: dict[int, int]

    def total(self) -> int:
        return sum(self.rows.values())


def full_table(n: int, k: int, n_cap: int = 16) -> CountingTable:
    """Tabulate n4_count (k=4) or n5_count (k=5) for all L in [0, 2^n)."""
    if k not in (4, 5):
        raise OutOfRange(f"closed-form tables exist for k in (4, 5), got {k}")
    if n < 2:
        raise OutOfRange(f"n={n} must be at least 2")
    if n > n_cap:
        raise TooLarge(f"n={n} exceeds the table cap {n_cap}")
    count = n4_count if k == 4 else n5_count
    rows = {L: count(n, L) for L in range(1 << n)}
    return CountingTable(n=n, k=k, rows=rows)

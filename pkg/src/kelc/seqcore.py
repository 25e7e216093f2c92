"""Periodic binary sequences, the half-period folding map, and error patterns.

One period of a 2^n-periodic binary sequence is stored as a packed integer:
bit i of ``bits`` holds s_i, so the word read as an unsigned number with s_0
in the least significant position is the canonical integer form of the
sequence.  This is also the iteration order used by the enumeration oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator

from .errors import CannotFold, InvalidLength, InvalidLiteral, OutOfRange

#: Largest supported period exponent for in-memory sequences (period 2^30).
MAX_N = 30

_HEX_DIGITS = set("0123456789abcdefABCDEF")


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a 2^n-periodic binary sequence.

    ``bits`` is the packed bit vector: bit i holds s_i, 0 <= i < 2^n.
    Instances are immutable and safe to share across threads.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise OutOfRange(f"period exponent n={self.n} outside [0, {MAX_N}]")
        if self.bits < 0 or self.bits.bit_length() > 1 << self.n:
            raise OutOfRange(f"bit vector does not fit in period 2^{self.n}")

    @property
    def period(self) -> int:
        return 1 << self.n

    @cached_property
    def weight(self) -> int:
        """Hamming weight of one period."""
        return self.bits.bit_count()

    def bit(self, i: int) -> int:
        if not 0 <= i < self.period:
            raise OutOfRange(f"index {i} outside [0, {self.period})")
        return (self.bits >> i) & 1

    def __xor__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        if self.n != other.n:
            raise OutOfRange("cannot combine sequences of different periods")
        return PeriodicSequence(self.n, self.bits ^ other.bits)

    def to01(self) -> str:
        """Bit-string literal, character j = s_j."""
        return "".join(str((self.bits >> i) & 1) for i in range(self.period))

    def to_hex(self) -> str:
        """Hex literal (period >= 4 only), nibble-per-4-bits, MSB-first."""
        if self.n < 2:
            raise OutOfRange("hex form requires period >= 4")
        digits = []
        for pos in range(0, self.period, 4):
            nib = 0
            for off in range(4):
                nib = (nib << 1) | ((self.bits >> (pos + off)) & 1)
            digits.append("0123456789ABCDEF"[nib])
        return "0x" + "".join(digits)

    def __str__(self) -> str:
        return self.to01()


class ErrorPattern(PeriodicSequence):
    """An error sequence; ``weight`` is its (cached) Hamming weight."""


def make_sequence(n: int, literal: str) -> PeriodicSequence:
    """Decode a bit-string or hex-string literal into a sequence.

    Grammar: ``^[01]{2^n}$`` or ``^0x[0-9A-Fa-f]{2^n/4}$`` (hex only when
    2^n >= 4).  Bit-string character j maps to s_j; hex digits expand
    nibble-by-nibble MSB-first, so ``0xA0`` at n=3 equals ``10100000``.
    """
    if not 0 <= n <= MAX_N:
        raise OutOfRange(f"period exponent n={n} outside [0, {MAX_N}]")
    period = 1 << n
    if literal.startswith("0x") or literal.startswith("0X"):
        if n < 2:
            raise InvalidLiteral("hex literals need a period of at least 4 bits")
        digits = literal[2:]
        bad = set(digits) - _HEX_DIGITS
        if bad or not digits:
            raise InvalidLiteral(f"not a hex literal: {literal!r}")
        if len(digits) != period // 4:
            raise InvalidLength(
                f"expected {period // 4} hex digits for period {period}, got {len(digits)}"
            )
        bits = 0
        for pos, digit in enumerate(digits):
            nib = int(digit, 16)
            for off in range(4):
                if (nib >> (3 - off)) & 1:
                    bits |= 1 << (4 * pos + off)
        return PeriodicSequence(n, bits)
    bad = set(literal) - {"0", "1"}
    if bad:
        raise InvalidLiteral(f"not a binary literal: {literal!r}")
    if len(literal) != period:
        raise InvalidLength(
            f"expected {period} bits for period exponent {n}, got {len(literal)}"
        )
    bits = 0
    for j, ch in enumerate(literal):
        if ch == "1":
            bits |= 1 << j
    return PeriodicSequence(n, bits)


def hamming_weight(s: PeriodicSequence) -> int:
    """Number of nonzero elements in one period."""
    return s.weight


def phi_fold(s: PeriodicSequence) -> PeriodicSequence:
    """XOR the two period halves: bit i of the result is s_i + s_{i+2^(n-1)}.

    The result has period 2^(n-1).  Weight never increases, and for n >= 2
    the weight parity is preserved.
    """
    if s.n == 0:
        raise CannotFold("period-1 sequences cannot be folded")
    half = 1 << (s.n - 1)
    left = s.bits & ((1 << half) - 1)
    right = s.bits >> half
    return PeriodicSequence(s.n - 1, left ^ right)


def pattern_count(n: int, max_weight: int, parity: str = "all") -> int:
    """Number of patterns ``error_patterns`` will yield for these arguments."""
    period = 1 << n
    return sum(
        comb(period, w)
        for w in range(0, max_weight + 1)
        if _parity_ok(w, parity)
    )


def _parity_ok(w: int, parity: str) -> bool:
    if parity == "all":
        return True
    if parity == "even":
        return w % 2 == 0
    if parity == "odd":
        return w % 2 == 1
    raise OutOfRange(f"parity filter must be all|even|odd, got {parity!r}")


def error_patterns(
    n: int, max_weight: int, parity: str = "all"
) -> Iterator[ErrorPattern]:
    """Yield every error pattern of weight <= max_weight matching the parity.

    Patterns are generated lazily, weight by weight, lexicographic by support
    set within a weight class, so the stream is deterministic and never
    materialized.
    """
    if not 0 <= n <= MAX_N:
        raise OutOfRange(f"period exponent n={n} outside [0, {MAX_N}]")
    period = 1 << n
    if not 0 <= max_weight <= period:
        raise OutOfRange(f"max_weight={max_weight} outside [0, {period}]")
    _parity_ok(0, parity)  # validate the filter name up front
    for w in range(0, max_weight + 1):
        if not _parity_ok(w, parity):
            continue
        for support in itertools.combinations(range(period), w):
            bits = 0
            for i in support:
                bits |= 1 << i
            yield ErrorPattern(n, bits)

"""Brute-force enumeration over the sequence space.

The scans walk sequence words in plain integer order (s_0 in the least
significant bit), optionally filtered by weight parity, and histogram either
the k-error linear complexity of every sequence or a full weight-class
census of plain linear complexity.  Ranges are sharded and merged by bin-wise
addition, so any thread count produces the identical histogram.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .counting import CountingTable, full_table
from .errors import FormulaError, OutOfRange, TooLarge
from .seqcore import PeriodicSequence, error_patterns, pattern_count

_PARITY_CODE = {"all": _kernel.PARITY_ALL, "even": _kernel.PARITY_EVEN,
                "odd": _kernel.PARITY_ODD}

#: exhaustive method scans the full error ball per sequence
MAX_N_EXHAUSTIVE = 4
#: fast method runs the linear-time fold per sequence
MAX_N_FAST = 5


@dataclass(frozen=True)
class SpectrumHistogram:
    """Empirical map L -> number of sequences with k-error complexity L."""

    n: int
    k: int
    filter: str
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class VerifyReport:
    """Row-by-row comparison of a closed-form table with an enumeration."""

    n: int
    k: int
    rows: tuple[tuple[int, int, int, bool], ...]
    overall: bool


def _shard_bounds(space: int, n: int) -> list[tuple[int, int]]:
    if n == 5:
        nshards = 1 << 12
    elif space >= (1 << 12):
        nshards = 1 << 4
    else:
        nshards = 1
    step = space // nshards
    return [
        (i * step, (i + 1) * step if i + 1 < nshards else space)
        for i in range(nshards)
    ]


def _run_shards(fn, bounds, threads: int) -> np.ndarray:
    workers = threads if threads > 0 else (os.cpu_count() or 1)
    if workers == 1 or len(bounds) == 1:
        parts = [fn(lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: fn(b[0], b[1]), bounds))
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    return total


def spectrum(
    n: int, k: int, filter: str = "even", method: str = "fast", threads: int = 0
) -> SpectrumHistogram:
    """Histogram the k-error linear complexity of a whole population.

    ``filter`` restricts the population by weight parity.  The exhaustive
    method takes the minimum of the Games-Chan fold over the full error
    ball per sequence (n <= 4); the fast method runs the linear-time
    cost-propagation fold per sequence (n <= 5).
    """
    if filter not in _PARITY_CODE:
        raise OutOfRange(f"filter must be all|even|odd, got {filter!r}")
    period = 1 << n
    if not 0 <= k <= period:
        raise OutOfRange(f"k={k} outside [0, {period}]")
    parity = _PARITY_CODE[filter]
    if method == "exhaustive":
        if n > MAX_N_EXHAUSTIVE:
            raise TooLarge(f"exhaustive spectrum supports n <= {MAX_N_EXHAUSTIVE}")
        # For an even-weight sequence an odd-weight error leaves an odd-weight
        # sum at the maximal complexity 2^n, which never attains the minimum,
        # so the even population only needs the even half of the error ball.
        pattern_parity = "even" if filter == "even" else "all"
        patterns = np.fromiter(
            (e.bits for e in error_patterns(n, k, pattern_parity)),
            dtype=np.uint64,
            count=pattern_count(n, k, pattern_parity),
        )
        scan = lambda lo, hi: _kernel.min_spectrum_range(n, parity, patterns, lo, hi)
    elif method == "fast":
        if n > MAX_N_FAST:
            raise TooLarge(f"fast spectrum supports n <= {MAX_N_FAST}")
        scan = lambda lo, hi: _kernel.klc_spectrum_range(n, k, parity, lo, hi)
    else:
        raise OutOfRange(f"method must be exhaustive|fast, got {method!r}")
    space = 1 << period
    hist = _run_shards(scan, _shard_bounds(space, n), threads)
    expected = space if filter == "all" else space // 2
    if int(hist.sum()) != expected:
        raise FormulaError(
            f"histogram covers {int(hist.sum())} sequences, expected {expected}"
        )
    counts = {L: int(c) for L, c in enumerate(hist) if c}
    return SpectrumHistogram(n=n, k=k, filter=filter, counts=counts)


def verify_counts(
    n: int, k: int, method: str = "fast", threads: int = 0
) -> VerifyReport:
    """Compare the closed-form table with an enumeration, row by row."""
    table = full_table(n, k)
    hist = spectrum(n, k, "even", method, threads)
    rows = []
    for L in range(1 << n):
        closed = table.rows[L]
        empirical = hist.counts.get(L, 0)
        rows.append((L, closed, empirical, closed == empirical))
    return VerifyReport(
        n=n, k=k, rows=tuple(rows), overall=all(r[3] for r in rows)
    )


#: weight_census refuses classes larger than this many sequences
CENSUS_CAP = 10**8


def weight_census(n: int, weight: int) -> dict[int, int]:
    """Map linear complexity -> number of weight-``weight`` sequences."""
    period = 1 << n
    if not 0 <= weight <= period:
        raise OutOfRange(f"weight={weight} outside [0, {period}]")
    from math import comb

    if comb(period, weight) > CENSUS_CAP:
        raise TooLarge(f"C({period}, {weight}) exceeds {CENSUS_CAP}")
    hist = _kernel.census(n, weight)
    return {L: int(c) for L, c in enumerate(hist) if c}


def sample_with_lc(n: int, L: int, seed: int) -> PeriodicSequence:
    """Draw a uniform sequence with linear complexity exactly L.

    Inverts the Games-Chan recursion level by level: below the half period
    the two halves must agree, above it the half-difference is a uniform
    draw from the smaller class and one half is free.  The class of
    complexity L has 2^(L-1) members, all equally likely for a uniform
    seed stream.
    """
    if not 0 <= L <= (1 << n):
        raise OutOfRange(f"L={L} outside [0, {1 << n}]")
    rng = random.Random(seed)

    def build(nn: int, target: int) -> int:
        if target == 0:
            return 0
        if nn == 0:
            return 1
        half = 1 << (nn - 1)
        if target <= half:
            lower = build(nn - 1, target)
            return lower | (lower << half)
        diff = build(nn - 1, target - half)
        left = rng.getrandbits(half)
        return left | ((left ^ diff) << half)

    return PeriodicSequence(n, build(n, L))


def histogram_csv(hist: SpectrumHistogram) -> str:
    """CSV form: header then one `L,count` row per bin, ascending, dense."""
    lines = ["L,count"]
    for L in range((1 << hist.n) + 1):
        lines.append(f"{L},{hist.counts.get(L, 0)}")
    return "\n".join(lines) + "\n"


def histogram_json(hist: SpectrumHistogram) -> str:
    """JSON form with counts as decimal strings (lossless at any size)."""
    payload = {
        "n": hist.n,
        "k": hist.k,
        "filter": hist.filter,
        "counts": {
            str(L): str(hist.counts.get(L, 0)) for L in range((1 << hist.n) + 1)
        },
    }
    return json.dumps(payload)


def table_csv(table: CountingTable) -> str:
    lines = ["L,count"]
    for L in range(1 << table.n):
        lines.append(f"{L},{table.rows[L]}")
    return "\n".join(lines) + "\n"


def table_json(table: CountingTable) -> str:
    payload = {
        "n": table.n,
        "k": table.k,
        "counts": {str(L): str(table.rows[L]) for L in range(1 << table.n)},
    }
    return json.dumps(payload)

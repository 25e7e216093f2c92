#!/usr/bin/env python3
"""Compare the compiled kernel against the pure fallback on the hot loops.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from kelc._kernel import pure
from kelc.seqcore import error_patterns, pattern_count

try:
    from kelc._kernel import fast
except ImportError:
    fast = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_lc(count):
    # fair core-loop comparison: scan a contiguous range in both backends
    hist_p = np.zeros(33, dtype=np.int64)
    hist_f = np.zeros(33, dtype=np.int64)
    t_pure = timed(pure.scan_klc_spectrum, 5, 0, pure.PARITY_ALL, 0, count, hist_p)
    t_fast = (
        timed(fast.scan_klc_spectrum, 5, 0, pure.PARITY_ALL, 0, count, hist_f)
        if fast
        else None
    )
    return ("plain complexity scan", count, t_pure, t_fast)


def bench_klc(count):
    hist_p = np.zeros(33, dtype=np.int64)
    t_pure = timed(pure.scan_klc_spectrum, 5, 4, pure.PARITY_EVEN, 0, count, hist_p)
    t_fast = None
    if fast:
        hist_f = np.zeros(33, dtype=np.int64)
        t_fast = timed(
            fast.scan_klc_spectrum, 5, 4, pure.PARITY_EVEN, 0, count, hist_f
        )
        assert hist_f.tolist()[:1] == hist_p.tolist()[:1]
    return ("k-error complexity scan (k=4)", count, t_pure, t_fast)


def bench_exhaustive(n, k):
    patterns = np.fromiter(
        (e.bits for e in error_patterns(n, k, "even")),
        dtype=np.uint64,
        count=pattern_count(n, k, "even"),
    )
    space = 1 << (1 << n)
    hist_p = np.zeros((1 << n) + 1, dtype=np.int64)
    t_pure = timed(
        pure.scan_min_spectrum, n, pure.PARITY_EVEN, patterns, 0, space, hist_p,
        repeat=1,
    )
    t_fast = None
    if fast:
        hist_f = np.zeros((1 << n) + 1, dtype=np.int64)
        t_fast = timed(
            fast.scan_min_spectrum, n, pure.PARITY_EVEN, patterns, 0, space,
            hist_f, repeat=1,
        )
    label = f"exhaustive min-over-ball scan (n={n}, k={k})"
    return (label, space * len(patterns), t_pure, t_fast)


def bench_census(n, weight):
    hist_p = np.zeros((1 << n) + 1, dtype=np.int64)
    t_pure = timed(pure.census_scan, n, weight, hist_p, repeat=1)
    t_fast = None
    if fast:
        hist_f = np.zeros((1 << n) + 1, dtype=np.int64)
        total = pure.binom_total(n, weight)
        t_fast = timed(fast.census_scan, n, weight, hist_f, total, repeat=1)
    return (f"weight-{weight} census (n={n})", pure.binom_total(n, weight),
            t_pure, t_fast)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    scale = 1 << 16 if args.quick else 1 << 20
    rows = [
        bench_lc(scale),
        bench_klc(scale),
        bench_exhaustive(4, 4),
        bench_census(5, 8 if not args.quick else 4),
    ]

    print(f"{'benchmark':44} {'items':>12} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, items, t_pure, t_fast in rows:
        if t_fast is None:
            print(f"{label:44} {items:>12} {t_pure:>9.3f}s {'n/a':>10} {'':>8}")
        else:
            print(
                f"{label:44} {items:>12} {t_pure:>9.3f}s {t_fast:>9.3f}s "
                f"{t_pure / t_fast:>7.1f}x"
            )
    if fast is None:
        print("\ncompiled kernel not built; run `pip install -e .` with Cython")


if __name__ == "__main__":
    main()

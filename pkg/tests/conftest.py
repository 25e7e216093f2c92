"""Shared fixtures: published reference values and small enumeration helpers."""

from kelc.seqcore import PeriodicSequence

# Published spectrum of 4-error linear complexity counts at n=5 (even-weight
# population), indexed by L = 0..31.  The closed-form table must reproduce
# this row for row, and the rows sum to 2^31.
TABLE1_N5 = [
    36457, 36457, 72914, 145828, 289416, 581072, 1144608, 2236992,
    2293760, 6837504, 13210112, 25031680, 14876672, 46845952, 8978432,
    4587520, 0, 127205376, 236060672, 418643968, 134217728, 567279616,
    33554432, 16777216, 0, 486539264, 0, 0, 0, 0, 0, 0,
]

# Expected n=4 table, anchored by the exhaustive enumeration oracle
# (2^15 even-weight sequences x 1941 even error patterns).
TABLE_N4 = [
    1941, 1941, 3602, 6388, 2048, 8656, 512, 256,
    0, 7424, 0, 0, 0, 0, 0, 0,
]


def all_sequences(n):
    """Every period-2^n sequence in integer order."""
    return (PeriodicSequence(n, bits) for bits in range(1 << (1 << n)))


def even_sequences(n):
    return (s for s in all_sequences(n) if s.weight % 2 == 0)


def odd_sequences(n):
    return (s for s in all_sequences(n) if s.weight % 2 == 1)

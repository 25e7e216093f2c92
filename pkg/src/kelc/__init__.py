"""Linear complexity and k-error linear complexity of 2^n-periodic binary
sequences: exact spectrum counting plus brute-force verification oracles."""

from ._kernel import BACKEND as kernel_backend
from .complexity import (
    ComplexityProfile,
    klc_exhaustive,
    klc_fast,
    kmin,
    linear_complexity,
    profile,
)
from .counting import (
    Category,
    CountingTable,
    LDecomposition,
    classify,
    decompose,
    f_mult,
    full_table,
    g_mult,
    h_mult,
    n4_count,
    n5_count,
    p_mult,
    q_mult,
    rueppel_count,
    weight8_count,
)
from .oracle import (
    SpectrumHistogram,
    VerifyReport,
    sample_with_lc,
    spectrum,
    verify_counts,
    weight_census,
)
from .seqcore import (
    ErrorPattern,
    PeriodicSequence,
    error_patterns,
    hamming_weight,
    make_sequence,
    phi_fold,
)

__version__ = "0.1.0"

__all__ = [
    "Category",
    "ComplexityProfile",
    "CountingTable",
    "ErrorPattern",
    "LDecomposition",
    "PeriodicSequence",
    "SpectrumHistogram",
    "VerifyReport",
    "classify",
    "decompose",
    "error_patterns",
    "f_mult",
    "full_table",
    "g_mult",
    "h_mult",
    "hamming_weight",
    "kernel_backend",
    "klc_exhaustive",
    "klc_fast",
    "kmin",
    "linear_complexity",
    "make_sequence",
    "n4_count",
    "n5_count",
    "p_mult",
    "phi_fold",
    "profile",
    "q_mult",
    "rueppel_count",
    "sample_with_lc",
    "spectrum",
    "verify_counts",
    "weight8_count",
    "weight_census",
]

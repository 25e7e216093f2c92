# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled twin of the pure kernels.

Covers periods up to 64 bits (n <= 6), which is where the enumeration
loops live; longer periods stay on the pure big-integer path.  Scan
functions release the GIL so callers can shard ranges across threads.
"""

from libc.stdint cimport int64_t, uint32_t, uint64_t

cdef extern from *:
    """
    #define KELC_POPCOUNT(x) __builtin_popcountll((unsigned long long)(x))
    """
    int KELC_POPCOUNT(uint64_t) nogil


cdef inline int lc_u64(uint64_t w, int n) nogil:
    cdef int length = 0, level, h
    cdef uint64_t left, right, diff
    if w == 0:
        return 0
    for level in range(n, 0, -1):
        h = 1 << (level - 1)
        left = w & (((<uint64_t>1) << h) - 1)
        right = w >> h
        diff = left ^ right
        if diff != 0:
            length += h
            w = diff
        else:
            w = left
    if w != 0:
        length += 1
    return length


cdef inline long klc_u64(uint64_t w, int n, long k) nogil:
    cdef uint32_t cost[64]
    cdef uint32_t ncost[64]
    cdef int size = 1 << n, h, i, length = 0
    cdef uint64_t left, right, diff, nw
    cdef long total
    cdef uint32_t ci, ch
    for i in range(size):
        cost[i] = 1
    while size > 1:
        h = size >> 1
        left = w & (((<uint64_t>1) << h) - 1)
        right = w >> h
        diff = left ^ right
        total = 0
        for i in range(h):
            if (diff >> i) & 1:
                ci = cost[i]
                ch = cost[i + h]
                total += ci if ci < ch else ch
        if total <= k:
            k -= total
            nw = 0
            for i in range(h):
                ci = cost[i]
                ch = cost[i + h]
                if (diff >> i) & 1:
                    if ci <= ch:
                        if (right >> i) & 1:
                            nw |= (<uint64_t>1) << i
                        ncost[i] = ch - ci
                    else:
                        if (left >> i) & 1:
                            nw |= (<uint64_t>1) << i
                        ncost[i] = ci - ch
                else:
                    if (left >> i) & 1:
                        nw |= (<uint64_t>1) << i
                    ncost[i] = ci + ch
            w = nw
        else:
            length += h
            w = diff
            for i in range(h):
                ci = cost[i]
                ch = cost[i + h]
                ncost[i] = ci if ci < ch else ch
        for i in range(h):
            cost[i] = ncost[i]
        size = h
    if (w & 1) and cost[0] > <uint32_t>k:
        length += 1
    return length


cdef inline uint64_t next_same_weight(uint64_t v) nogil:
    # Gosper's hack: next larger word with the same popcount.
    cdef uint64_t c = v & (~v + 1)
    cdef uint64_t r = v + c
    return r | (((v ^ r) >> 2) // c)


def lc_word(word, int n):
    return lc_u64(<uint64_t>word, n)


def klc_word(word, int n, long k):
    return klc_u64(<uint64_t>word, n, k)


def min_lc_over_patterns(word, int n, uint64_t[::1] patterns):
    cdef uint64_t w = <uint64_t>word
    cdef Py_ssize_t i, npat = patterns.shape[0]
    cdef int best = (1 << n) + 1, v
    with nogil:
        for i in range(npat):
            v = lc_u64(w ^ patterns[i], n)
            if v < best:
                best = v
                if best == 0:
                    break
    return best


def scan_klc_spectrum(int n, long k, int parity, uint64_t start, uint64_t stop,
                      int64_t[::1] hist):
    cdef uint64_t w
    cdef int pc
    with nogil:
        for w in range(start, stop):
            pc = KELC_POPCOUNT(w)
            if parity == 1 and (pc & 1):
                continue
            if parity == 2 and not (pc & 1):
                continue
            if pc <= k:
                hist[0] += 1
            else:
                hist[klc_u64(w, n, k)] += 1


def scan_min_spectrum(int n, int parity, uint64_t[::1] patterns,
                      uint64_t start, uint64_t stop, int64_t[::1] hist):
    cdef uint64_t w
    cdef Py_ssize_t i, npat = patterns.shape[0]
    cdef int pc, best, v
    with nogil:
        for w in range(start, stop):
            pc = KELC_POPCOUNT(w)
            if parity == 1 and (pc & 1):
                continue
            if parity == 2 and not (pc & 1):
                continue
            best = (1 << n) + 1
            for i in range(npat):
                v = lc_u64(w ^ patterns[i], n)
                if v < best:
                    best = v
                    if best == 0:
                        break
            hist[best] += 1


def klc_profile_scan(int n, uint64_t[::1] words, uint64_t[::1] patterns,
                     int64_t[::1] weights, int kmax, int64_t[:, ::1] out):
    cdef int64_t best_by_weight[65]
    cdef Py_ssize_t wi, pi, nwords = words.shape[0], npat = patterns.shape[0]
    cdef int64_t run
    cdef int k, v
    cdef uint64_t w
    with nogil:
        for wi in range(nwords):
            w = words[wi]
            for k in range(kmax + 1):
                best_by_weight[k] = (1 << n) + 1
            for pi in range(npat):
                v = lc_u64(w ^ patterns[pi], n)
                if v < best_by_weight[weights[pi]]:
                    best_by_weight[weights[pi]] = v
            run = (1 << n) + 1
            for k in range(kmax + 1):
                if best_by_weight[k] < run:
                    run = best_by_weight[k]
                out[wi, k] = run


def census_scan(int n, int weight, int64_t[::1] hist, int64_t total):
    cdef uint64_t v
    cdef int64_t i
    if weight == 0:
        hist[0] += 1
        return
    if weight >= 64:
        v = <uint64_t>0xFFFFFFFFFFFFFFFF
    else:
        v = ((<uint64_t>1) << weight) - 1
    with nogil:
        for i in range(total):
            hist[lc_u64(v, n)] += 1
            v = next_same_weight(v)

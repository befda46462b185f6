# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; mirrors ``_kernels_py.py`` line for line."""

cdef enum:
    MAX_N = 60


def cyclic_two_counts(int n, bint prune=True):
    """Histogram, by number of 2s, of cyclic {0,1,2}-strings of length ``n``
    with no adjacent pair drawn from {1, 2}."""
    cdef int s[MAX_N]
    cdef long long counts[MAX_N + 1]
    cdef int i, j, last, twos
    cdef bint bad
    if n < 1 or n > MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}")
    for j in range(n + 1):
        counts[j] = 0
    for j in range(n):
        s[j] = -1
    last = n - 1
    i = 0
    with nogil:
        while i >= 0:
            s[i] += 1
            if s[i] > 2:
                s[i] = -1
                i -= 1
                continue
            if prune and i > 0 and s[i] != 0 and s[i - 1] != 0:
                continue
            if i < last:
                i += 1
                continue
            if s[last] != 0 and s[0] != 0:
                continue
            if not prune:
                bad = False
                for j in range(last):
                    if s[j] != 0 and s[j + 1] != 0:
                        bad = True
                        break
                if bad:
                    continue
            twos = 0
            for j in range(n):
                if s[j] == 2:
                    twos += 1
            counts[twos] += 1
    return [counts[j] for j in range(n + 1)]

# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops.  ``_fallback.py`` mirrors every function here."""
import numpy as np

from libc.math cimport cos, fabs, floor, pow, sin

cdef double TWO_PI = 6.283185307179586


def sieve_segment(long long lo, long long hi, const long long[::1] base_primes):
    """uint8 primality flags for lo..hi inclusive; base_primes must cover sqrt(hi)."""
    cdef Py_ssize_t size = hi - lo + 1
    out = np.ones(size, dtype=np.uint8)
    cdef unsigned char[::1] flags = out
    cdef long long p, m, start
    cdef Py_ssize_t i
    for i in range(size):
        if lo + i < 2:
            flags[i] = 0
        else:
            break
    for i in range(base_primes.shape[0]):
        p = base_primes[i]
        if p * p > hi:
            break
        start = ((lo + p - 1) // p) * p
        if start < p * p:
            start = p * p
        m = start
        while m <= hi:
            flags[m - lo] = 0
            m += p
    return out


def ndelta_brute(const double[::1] values, const double[::1] deltas):
    """For each delta, the number of ordered pairs (i, j) with |v_i - v_j| <= delta."""
    cdef Py_ssize_t n = values.shape[0], nd = deltas.shape[0]
    counts = np.zeros(nd, dtype=np.int64)
    cdef long long[::1] cnt = counts
    cdef Py_ssize_t i, j, k
    cdef double diff
    for i in range(n):
        for j in range(n):
            diff = fabs(values[i] - values[j])
            for k in range(nd):
                if diff <= deltas[k]:
                    cnt[k] += 1
    return counts


def progression_expsum(long long start, long long step, long long count,
                       double h1, double c, double h2, double g):
    """Sum of e(h1 n^c + h2 n^g) over n = start + k*step, 0 <= k < count.

    Phases are reduced mod 1 before the trig calls; Neumaier-compensated sums.
    """
    cdef double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0
    cdef double n, ph, x, t
    cdef long long k
    for k in range(count):
        n = <double>(start + k * step)
        ph = h1 * pow(n, c) + h2 * pow(n, g)
        ph -= floor(ph)
        x = cos(TWO_PI * ph)
        t = re + x
        if fabs(re) >= fabs(x):
            cre += (re - t) + x
        else:
            cre += (x - t) + re
        re = t
        x = sin(TWO_PI * ph)
        t = im + x
        if fabs(im) >= fabs(x):
            cim += (im - t) + x
        else:
            cim += (x - t) + im
        im = t
    return re + cre, im + cim

# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernel: Pruefer decoding plus per-tree degree statistics."""

import numpy as np

from libc.stdlib cimport abs as iabs

cdef enum:
    MAXN = 16
NSTAT = 9


cdef void _decode(int n, long long index, int* seq, int* deg, int* work,
                  int* eu, int* ev) noexcept nogil:
    cdef int j, v, ptr, leaf
    for j in range(n - 3, -1, -1):
        seq[j] = <int>(index % n)
        index //= n
    for v in range(n):
        deg[v] = 1
    for j in range(n - 2):
        deg[seq[j]] += 1
    for v in range(n):
        work[v] = deg[v]
    ptr = 0
    while work[ptr] != 1:
        ptr += 1
    leaf = ptr
    for j in range(n - 2):
        v = seq[j]
        eu[j] = leaf
        ev[j] = v
        work[v] -= 1
        if work[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while work[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu[n - 2] = leaf
    ev[n - 2] = n - 1


cdef void _stats(int n, int* deg, int* eu, int* ev, long long* row) noexcept nogil:
    cdef int j, i, a, b, d
    cdef long long irr = 0, fws = 0, m1 = 0, m2 = 0, f1 = 0, sig = 0
    cdef long long tot = 0
    cdef int dmax = 0, big = 0
    for j in range(n - 1):
        a = deg[eu[j]]
        b = deg[ev[j]]
        d = a - b
        irr += iabs(d)
        fws += iabs(a * a - b * b)
        m2 += a * b
        sig += d * d
    for i in range(n):
        d = deg[i]
        m1 += d * d
        f1 += d * d * d
        if d > dmax:
            dmax = d
        if d > 2:
            big += 1
        for j in range(i + 1, n):
            tot += iabs(d - deg[j])
    row[0] = irr
    row[1] = fws
    row[2] = m1
    row[3] = m2
    row[4] = f1
    row[5] = sig
    row[6] = dmax
    row[7] = big
    row[8] = tot


def tree_stats(int n, long long start, long long stop):
    """Stats rows for Pruefer indices ``start <= i < stop`` on ``n`` vertices."""
    if n < 2 or n > MAXN:
        raise ValueError(f"kernel supports 2 <= n <= {MAXN}")
    if stop < start:
        raise ValueError("stop < start")
    out = np.zeros((stop - start, NSTAT), dtype=np.int64)
    cdef long long[:, ::1] o = out
    cdef int seq[MAXN]
    cdef int deg[MAXN]
    cdef int work[MAXN]
    cdef int eu[MAXN]
    cdef int ev[MAXN]
    cdef long long idx
    with nogil:
        for idx in range(start, stop):
            _decode(n, idx, seq, deg, work, eu, ev)
            _stats(n, deg, eu, ev, &o[idx - start, 0])
    return out

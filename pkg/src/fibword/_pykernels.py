"""Pure-Python twin of the compiled sweep kernel (same rows, same order)."""

import numpy as np

NSTAT = 9


def _decode(n, index):
    seq = [0] * (n - 2)
    for j in range(n - 3, -1, -1):
        index, seq[j] = divmod(index, n)
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    work = deg[:]
    ptr = 0
    while work[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in seq:
        edges.append((leaf, v))
        work[v] -= 1
        if work[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while work[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return deg, edges


def _stats(deg, edges):
    irr = fws = m2 = sig = 0
    for u, v in edges:
        a, b = deg[u], deg[v]
        irr += abs(a - b)
        fws += abs(a * a - b * b)
        m2 += a * b
        sig += (a - b) ** 2
    m1 = sum(d * d for d in deg)
    f1 = sum(d * d * d for d in deg)
    tot = 0
    for i, d in enumerate(deg):
        for e in deg[i + 1:]:
            tot += abs(d - e)
    return (irr, fws, m1, m2, f1, sig, max(deg), sum(d > 2 for d in deg), tot)


def tree_stats(n, start, stop):
    """Stats rows for Pruefer indices ``start <= i < stop`` on ``n`` vertices."""
    if n < 2:
        raise ValueError("kernel supports n >= 2")
    if stop < start:
        raise ValueError("stop < start")
    out = np.zeros((stop - start, NSTAT), dtype=np.int64)
    for i in range(start, stop):
        out[i - start] = _stats(*_decode(n, i))
    return out

"""Exact Fibonacci, Lucas and p-generalized Fibonacci numbers.

Indexing is F_0 = 0, F_1 = 1 throughout. Python integers are unbounded, so
every exact routine returns a plain ``int``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "GOLDEN",
    "GoldenConstants",
    "PrecisionError",
    "BINET_MAX_N",
    "fib",
    "fib_signed",
    "fib_from_one",
    "fib_binet",
    "lucas",
    "gen_fib",
    "fib_gcd",
]

BINET_MAX_N = 70


class PrecisionError(ValueError):
    """Raised when a floating-point evaluation cannot be trusted to round correctly."""


@dataclass(frozen=True)
class GoldenConstants:
    phi: float
    psi: float
    sqrt5: float


_SQRT5 = math.sqrt(5.0)
GOLDEN = GoldenConstants(phi=(1.0 + _SQRT5) / 2.0, psi=(1.0 - _SQRT5) / 2.0, sqrt5=_SQRT5)


_CHECKPOINT = 256


@lru_cache(maxsize=4096)
def _checkpoint(k: int) -> tuple[int, int]:
    # (F_{256k}, F_{256k+1}); later calls resume from the nearest cached block.
    if k == 0:
        return 0, 1
    a, b = _checkpoint(k - 1)
    for _ in range(_CHECKPOINT):
        a, b = b, a + b
    return a, b


def fib(n: int) -> int:
    """Return F_n exactly.

    >>> fib(10)
    55
    """
    if n < 0:
        raise ValueError(f"fib requires n >= 0, got {n}")
    a, b = _checkpoint(n // _CHECKPOINT)
    for _ in range(n % _CHECKPOINT):
        a, b = b, a + b
    return a


def fib_signed(j: int) -> int:
    """F_j extended to negative indices by F_{-j} = (-1)^(j+1) F_j."""
    if j >= 0:
        return fib(j)
    k = -j
    return fib(k) if k % 2 == 1 else -fib(k)


def fib_from_one(n: int) -> int:
    """The f_1 = f_2 = 1 convention; coincides with F_n but rejects n < 1."""
    if n < 1:
        raise ValueError(f"one-based indexing requires n >= 1, got {n}")
    return fib(n)


def fib_binet(n: int) -> float:
    """Binet's formula in double precision, valid while it still rounds to F_n."""
    if n < 0:
        raise ValueError(f"fib_binet requires n >= 0, got {n}")
    if n > BINET_MAX_N:
        raise PrecisionError(
            f"double-precision Binet is only exact up to n={BINET_MAX_N}, got {n}"
        )
    g = GOLDEN
    return (g.phi**n - g.psi**n) / g.sqrt5


def lucas(m: int) -> int:
    """L_m = F_{m-1} + F_{m+1}."""
    if m < 1:
        raise ValueError(f"lucas requires m >= 1, got {m}")
    return fib(m - 1) + fib(m + 1)


def gen_fib(p: int, n: int) -> int:
    """p-generalized Fibonacci number F_{p,n}.

    Each term is the sum of the previous ``p`` terms, with F_{p,n} = 0 for
    -p+2 <= n <= 0 and F_{p,1} = 1.
    """
    if p < 1:
        raise ValueError(f"gen_fib requires p >= 1, got {p}")
    if n < -p + 2:
        raise ValueError(f"gen_fib(p={p}) is defined for n >= {-p + 2}, got {n}")
    if n <= 0:
        return 0
    if n == 1:
        return 1
    window = deque([0] * (p - 1) + [1], maxlen=p)
    total = 1
    for _ in range(2, n + 1):
        nxt = total
        total += nxt - window[0]
        window.append(nxt)
    return window[-1]


def fib_gcd(m: int, n: int) -> int:
    """gcd(F_m, F_n) evaluated on the exact values."""
    if m < 1 or n < 1:
        raise ValueError(f"fib_gcd requires m, n >= 1, got ({m}, {n})")
    return math.gcd(fib(m), fib(n))

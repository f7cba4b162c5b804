"""High-precision partial sums and closed forms for the Fibonacci series."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath
from mpmath import mp, mpf

from .fibnum import fib, fib_signed, lucas

__all__ = [
    "WORKING_DPS",
    "PartialSum",
    "LucasVariant",
    "proex1_lhs",
    "proex1_lhs_truncated",
    "proex1_rhs",
    "binom_fib_partial",
    "binom_fib_closed",
    "binom_fib_terms_for",
    "gf_fib_coeffs",
]

WORKING_DPS = 50


@dataclass(frozen=True)
class PartialSum:
    terms: int
    value: mpf
    tail_bound: mpf

    def __float__(self) -> float:
        return float(self.value)


class LucasVariant(str, enum.Enum):
    STANDARD = "STANDARD"  # L_{4n} = phi^{4n} + psi^{4n}
    PAPER = "PAPER"  # L_{4n} taken as F_{4n-2} + F_{4n+2}


def _phi() -> mpf:
    return (1 + mpmath.sqrt(5)) / 2


def _check_n(n: int):
    if not 1 <= n <= 5:
        raise ValueError(f"n must be in 1..5, got {n}")


def _proex1_term(n: int, k: int) -> Fraction:
    return Fraction(fib_signed(2 * n + k) * fib_signed(2 * n - k), factorial(k) * 2**n)


def proex1_lhs(n: int, K: int) -> PartialSum:
    """sum_{k=1}^{K} F_{2n+k} F_{2n-k} / (k! 2^n), negative indices extended.

    Summed exactly as a rational. The tail bound uses |F_j| <= phi^|j|, which
    gives |term_k| <= phi^(4n+2k) / (k! 2^n).
    """
    _check_n(n)
    if K < 1:
        raise ValueError("K must be >= 1")
    total = sum((_proex1_term(n, k) for k in range(1, K + 1)), Fraction(0))
    with mp.workdps(WORKING_DPS):
        phi = _phi()
        q = phi**2
        head = phi ** (4 * n) / 2**n * q ** (K + 1) / mpmath.factorial(K + 1)
        tail = head / (1 - q / (K + 2))
        value = mpf(total.numerator) / total.denominator
    return PartialSum(K, value, tail)


def proex1_lhs_truncated(n: int) -> PartialSum:
    """Same sum stopped at k = 2n, so no negative Fibonacci index appears."""
    _check_n(n)
    total = sum((_proex1_term(n, k) for k in range(1, 2 * n + 1)), Fraction(0))
    with mp.workdps(WORKING_DPS):
        return PartialSum(2 * n, mpf(total.numerator) / total.denominator, mpf(0))


def proex1_rhs(n: int, lucas_variant: LucasVariant | str = LucasVariant.STANDARD) -> mpf:
    """(L_{4n}(e - 1) - (e^{-phi^2} - 1) - (e^{-phi^{-2}} - 1)) / (5 * 2^n)."""
    _check_n(n)
    variant = LucasVariant(lucas_variant)
    coeff = lucas(4 * n) if variant is LucasVariant.STANDARD else fib(4 * n - 2) + fib(4 * n + 2)
    with mp.workdps(WORKING_DPS):
        phi = _phi()
        e = mpmath.e
        num = coeff * (e - 1) - (mpmath.exp(-(phi**2)) - 1) - (mpmath.exp(-(phi**-2)) - 1)
        return num / (5 * 2**n)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x)) if isinstance(x, mpf) else Fraction(x)


def _check_convergent(x: Fraction):
    with mp.workdps(WORKING_DPS):
        if abs(4 * _phi() * mpf(x.numerator) / x.denominator) >= 1:
            raise ValueError(f"series diverges for x = {x}: |4 phi x| >= 1")


def binom_fib_partial(x, N: int) -> PartialSum:
    """sum_{n=0}^{N} C(2n, n) F_n x^n, accumulated as an exact rational.

    ``x`` may be a Fraction, an int, a string such as ``"1/8"`` or a float
    (floats are taken at their exact binary value).
    """
    xf = _as_fraction(x)
    _check_convergent(xf)
    if N < 0:
        raise ValueError("N must be >= 0")
    total = Fraction(0)
    power = Fraction(1)
    last = Fraction(0)
    for n in range(N + 1):
        last = comb(2 * n, n) * fib(n) * power
        total += last
        power *= xf
    with mp.workdps(WORKING_DPS):
        value = mpf(total.numerator) / total.denominator
        tail = _binom_tail(xf, N, last)
    return PartialSum(N + 1, value, tail)


def _binom_tail(x: Fraction, N: int, last: Fraction) -> mpf:
    # Term ratio t_{n+1}/t_n = 2(2n+1)/(n+1) * F_{n+1}/F_n * x < 4x * F_{n+1}/F_n;
    # beyond N the Fibonacci ratio is at most max(F_{N+1}/F_N, F_{N+2}/F_{N+1}).
    if x == 0:
        return mpf(0)
    if N < 1:
        # first nonzero term has not appeared yet; bound from n = 1 on
        first = 2 * abs(x)
        return _binom_tail(x, 1, first) + mpf(first.numerator) / first.denominator
    ratio = max(Fraction(fib(N + 1), fib(N)), Fraction(fib(N + 2), fib(N + 1)))
    rho = 4 * abs(x) * ratio
    if rho >= 1:
        return mpf("inf")
    t = abs(last)
    bound = t * rho / (1 - rho)
    return mpf(bound.numerator) / bound.denominator


def binom_fib_closed(x) -> mpf:
    """(1/sqrt 5) (1/sqrt(1 - 4 phi x) - 1/sqrt(1 - 4 psi x))."""
    xf = _as_fraction(x)
    _check_convergent(xf)
    with mp.workdps(WORKING_DPS):
        phi = _phi()
        psi = 1 - phi
        xm = mpf(xf.numerator) / xf.denominator
        return (1 / mpmath.sqrt(1 - 4 * phi * xm) - 1 / mpmath.sqrt(1 - 4 * psi * xm)) / mpmath.sqrt(5)


def binom_fib_terms_for(x, tol: float) -> int:
    """Smallest N whose tail bound is below ``tol``."""
    xf = _as_fraction(x)
    _check_convergent(xf)
    N = 1
    while binom_fib_partial(xf, N).tail_bound >= tol:
        N *= 2
    lo, hi = N // 2, N
    while lo < hi:
        mid = (lo + hi) // 2
        if binom_fib_partial(xf, mid).tail_bound < tol:
            hi = mid
        else:
            lo = mid + 1
    return lo


def gf_fib_coeffs(N: int) -> list[int]:
    """Taylor coefficients c_0 .. c_N of 1 / (1 - z - z^2)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    coeffs = [1, 1][: N + 1]
    while len(coeffs) < N + 1:
        coeffs.append(coeffs[-1] + coeffs[-2])
    return coeffs

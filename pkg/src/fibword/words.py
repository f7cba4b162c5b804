"""Fibonacci-type words, correlations and densities."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .fibnum import GOLDEN, fib

__all__ = [
    "Word",
    "CorrelationVector",
    "DensityMethod",
    "DensityValue",
    "MAX_FIB_WORD_INDEX",
    "MAX_GRID_WORD_LENGTH",
    "MAX_RESIDUE_MODULUS",
    "fib_word",
    "fib_words_up_to",
    "std_fib_word",
    "rev_fib_word",
    "grid_length",
    "grid_word",
    "correlation",
    "correlation_naive",
    "ones_density",
    "df_pair",
    "pisano_period",
    "residue_density",
    "grid_growth",
]

MAX_FIB_WORD_INDEX = 40
MAX_GRID_WORD_LENGTH = 10**7
MAX_RESIDUE_MODULUS = 10**6


@dataclass(frozen=True)
class Word:
    """A finite word; ``index`` records which F_n it is when known."""

    symbols: str
    index: int | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols

    def __repr__(self) -> str:
        body = self.symbols if self.symbols else "ε"
        if len(body) > 40:
            body = body[:37] + "..."
        tag = f"F_{self.index}" if self.index is not None else "Word"
        return f"{tag}({body!s}, len={len(self)})"

    def __add__(self, other: "Word | str") -> "Word":
        return Word(self.symbols + str(other))

    def __getitem__(self, item):
        return self.symbols[item]

    @property
    def is_empty(self) -> bool:
        return not self.symbols

    def count(self, symbol: str) -> int:
        return self.symbols.count(symbol)


WordLike = Union[Word, str]


def _as_str(w: WordLike) -> str:
    return w.symbols if isinstance(w, Word) else str(w)


def fib_word(n: int, convention: str = "table") -> Word:
    """The n-th Fibonacci word.

    With the default ``"table"`` convention F_1 = "1", F_2 = "0" and
    F_n = F_{n-1} F_{n-2}, so ``len(fib_word(n)) == fib(n)``. The
    ``"classic"`` convention uses S_0 = "0", S_1 = "01" with the same
    recursion and accepts n >= 0.
    """
    if convention == "table":
        if n < 1:
            raise ValueError(f"fib_word requires n >= 1, got {n}")
        first, second, lo = "1", "0", 1
    elif convention == "classic":
        if n < 0:
            raise ValueError(f"classic fib_word requires n >= 0, got {n}")
        first, second, lo = "0", "01", 0
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if n > MAX_FIB_WORD_INDEX:
        raise ValueError(f"fib_word is materialized only up to n={MAX_FIB_WORD_INDEX}")
    if n == lo:
        return Word(first, n)
    prev, cur = first, second
    for _ in range(n - lo - 1):
        prev, cur = cur, cur + prev
    return Word(cur, n)


def fib_words_up_to(n: int) -> list[Word]:
    """F_1 .. F_n in the table convention."""
    if n < 1:
        raise ValueError("Order n must be a positive integer (>=1).")
    if n > MAX_FIB_WORD_INDEX:
        raise ValueError(f"fib_word is materialized only up to n={MAX_FIB_WORD_INDEX}")
    words = [Word("1", 1)]
    if n >= 2:
        words.append(Word("0", 2))
    for i in range(3, n + 1):
        words.append(Word(words[-1].symbols + words[-2].symbols, i))
    return words


def _two_term(u: WordLike, v: WordLike, n: int, reverse: bool) -> Word:
    su, sv = _as_str(u), _as_str(v)
    if not su or not sv:
        raise ValueError("u and v must be nonempty words")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return Word(su)
    prev, cur = su, sv
    for _ in range(n - 2):
        prev, cur = cur, (prev + cur) if reverse else (cur + prev)
    return Word(cur)


def std_fib_word(u: WordLike, v: WordLike, n: int) -> Word:
    """f_1 = u, f_2 = v, f_n = f_{n-1} f_{n-2}."""
    return _two_term(u, v, n, reverse=False)


def rev_fib_word(u: WordLike, v: WordLike, n: int) -> Word:
    """f'_1 = u, f'_2 = v, f'_n = f'_{n-2} f'_{n-1}."""
    return _two_term(u, v, n, reverse=True)


def grid_length(u: int, v: int, a_len: int = 1, b_len: int = 1) -> int:
    """Exact length of the grid word T(u, v) for boundary lengths |a|, |b|."""
    if u < 0 or v < 0:
        raise ValueError("grid coordinates must be nonnegative")
    if u == 0:
        return a_len
    if v == 0:
        return b_len
    # row[j] holds the length at (i, j) for the current i.
    row = [a_len] * (v + 1)
    for _ in range(1, u + 1):
        row[0] = b_len
        for j in range(1, v + 1):
            row[j] += row[j - 1]
    return row[v]


def grid_word(u: int, v: int, a: WordLike, b: WordLike) -> Word:
    """T(0, v) = a, T(u, 0) = b (u >= 1), T(u, v) = T(u-1, v) T(u, v-1)."""
    sa, sb = _as_str(a), _as_str(b)
    if not sa or not sb:
        raise ValueError("boundary words must be nonempty")
    total = grid_length(u, v, len(sa), len(sb))
    if total > MAX_GRID_WORD_LENGTH:
        raise ValueError(
            f"T({u},{v}) has length {total} > {MAX_GRID_WORD_LENGTH}; use grid_length"
        )
    if u == 0:
        return Word(sa)
    if v == 0:
        return Word(sb)
    row = [sa] * (v + 1)
    for _ in range(1, u + 1):
        row[0] = sb
        for j in range(1, v + 1):
            row[j] = row[j] + row[j - 1]
    return Word(row[v])


@dataclass(frozen=True)
class CorrelationVector:
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def correlation(u: WordLike, v: WordLike) -> CorrelationVector:
    """Correlation of u over v: bit k is set iff the suffix u[k:] is a prefix of v."""
    su, sv = _as_str(u), _as_str(v)
    n, m = len(su), len(sv)
    if n < 1:
        raise ValueError("u must be nonempty")
    if n > m:
        raise ValueError(f"correlation needs len(u) <= len(v), got {n} > {m}")
    return CorrelationVector(tuple(int(sv.startswith(su[k:])) for k in range(n)))


def correlation_naive(u: WordLike, v: WordLike) -> CorrelationVector:
    """Correlation by checking every aligned pair i = j + k directly."""
    su, sv = _as_str(u), _as_str(v)
    n, m = len(su), len(sv)
    if n < 1 or n > m:
        raise ValueError("correlation needs 1 <= len(u) <= len(v)")
    bits = []
    for k in range(n):
        ok = all(su[j + k] == sv[j] for j in range(m) if j + k < n)
        bits.append(int(ok))
    return CorrelationVector(tuple(bits))


class DensityMethod(str, enum.Enum):
    CLOSED_FORM = "CLOSED_FORM"
    EMPIRICAL = "EMPIRICAL"


@dataclass(frozen=True)
class DensityValue:
    value: float
    method: DensityMethod
    params: tuple = ()

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"density {self.value} outside [0, 1]")

    def display(self, places: int = 4) -> str:
        """Truncate (not round) to ``places`` decimals, the way the published table reads."""
        scale = 10**places
        return f"{math.floor(self.value * scale + 1e-12) / scale:.{places}f}"


def ones_density(w: WordLike) -> DensityValue:
    s = _as_str(w)
    if not s:
        raise ValueError("density of the empty word is undefined")
    return DensityValue(s.count("1") / len(s), DensityMethod.EMPIRICAL, (len(s),))


_INV_PHI_SQ = 1.0 / (GOLDEN.phi**2)


def df_pair(n: int, m: int) -> DensityValue:
    """Subword density of (F_n, F_m): 1 / (phi^2 * gcd(n, m))."""
    if n < 1 or m < 1:
        raise ValueError(f"df_pair requires n, m >= 1, got ({n}, {m})")
    return DensityValue(_INV_PHI_SQ / math.gcd(n, m), DensityMethod.CLOSED_FORM, (n, m))


def pisano_period(modulus: int) -> int:
    """Period of F_i mod ``modulus``."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if modulus == 1:
        return 1
    a, b = 0, 1
    i = 0
    while True:
        a, b = b, (a + b) % modulus
        i += 1
        if a == 0 and b == 1:
            return i


def residue_density(m: int, lam: int) -> DensityValue:
    """Fraction of residues mod m^lam attained by the Fibonacci numbers."""
    if m < 2 or lam < 1:
        raise ValueError("residue_density requires m >= 2 and lambda >= 1")
    modulus = m**lam
    if modulus > MAX_RESIDUE_MODULUS:
        raise OverflowError(f"m^lambda = {modulus} exceeds {MAX_RESIDUE_MODULUS}")
    period = pisano_period(modulus)
    seen = np.zeros(modulus, dtype=bool)
    a, b = 0, 1
    for _ in range(period):
        seen[a] = True
        a, b = b, (a + b) % modulus
    return DensityValue(int(seen.sum()) / modulus, DensityMethod.EMPIRICAL, (m, lam))


def grid_growth(N: int) -> float:
    """(1/N) ln l(N, N) for the grid length recurrence with unit boundaries.

    Each row of the grid is the prefix sum of the previous one, so in log
    space a row is ``logaddexp.accumulate`` of its predecessor.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > 5000:
        raise ValueError("grid_growth is supported for N <= 5000")
    row = np.zeros(N + 1)
    for _ in range(N):
        row = np.logaddexp.accumulate(row)
    return float(row[N] / N)

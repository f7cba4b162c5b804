from fractions import Fraction
from math import comb

import mpmath
import pytest
import sympy as sp

from fibword.fibnum import fib
from fibword.series import (
    WORKING_DPS,
    LucasVariant,
    binom_fib_closed,
    binom_fib_partial,
    binom_fib_terms_for,
    gf_fib_coeffs,
    proex1_lhs,
    proex1_lhs_truncated,
    proex1_rhs,
)


@pytest.fixture(autouse=True)
def working_precision():
    # compare library values at the precision they were computed in
    with mpmath.workdps(WORKING_DPS):
        yield


def test_binom_small_partials():
    assert binom_fib_partial("1/8", 0).value == 0
    assert binom_fib_partial("1/8", 1).value == pytest.approx(0.25)
    # 2*1/8 + 6*1/64 = 0.34375; frozen from the exact rational sum
    assert binom_fib_partial("1/8", 2).value == pytest.approx(0.34375, abs=1e-30)


def test_binom_partial_against_sympy():
    x = sp.Rational(1, 16)
    ref = sum(sp.binomial(2 * n, n) * sp.fibonacci(n) * x**n for n in range(41))
    got = binom_fib_partial(Fraction(1, 16), 40).value
    assert abs(got - mpmath.mpf(sp.N(ref, 60))) < mpmath.mpf(10) ** -45


def test_binom_tail_bound_is_honest():
    for x in (Fraction(1, 8), Fraction(1, 16), Fraction(1, 23)):
        closed = binom_fib_closed(x)
        for N in (5, 20, 60):
            p = binom_fib_partial(x, N)
            assert abs(closed - p.value) <= p.tail_bound


def test_binom_closed_values():
    with mpmath.workdps(50):
        assert abs(binom_fib_closed("1/8") - mpmath.sqrt(10) / 5) < mpmath.mpf(10) ** -40
    assert binom_fib_closed(0) == 0


def test_binom_closed_matches_sympy_taylor():
    z = sp.symbols("z")
    phi = (1 + sp.sqrt(5)) / 2
    psi = 1 - phi
    f = (1 / sp.sqrt(1 - 4 * phi * z) - 1 / sp.sqrt(1 - 4 * psi * z)) / sp.sqrt(5)
    coeffs = sp.Poly(sp.series(f, z, 0, 9).removeO(), z).all_coeffs()[::-1]
    for n, c in enumerate(coeffs):
        assert sp.simplify(c - comb(2 * n, n) * fib(n)) == 0


def test_binom_divergent_weight():
    with pytest.raises(ValueError):
        binom_fib_partial("1/4", 10)
    with pytest.raises(ValueError):
        binom_fib_closed(Fraction(1, 6))


def test_binom_terms_for():
    N = binom_fib_terms_for("1/8", 1e-10)
    assert binom_fib_partial("1/8", N).tail_bound < 1e-10
    assert binom_fib_partial("1/8", N - 1).tail_bound >= 1e-10


def test_proex1_truncation_is_finite_sum():
    for n in range(1, 6):
        t = proex1_lhs_truncated(n)
        manual = sum(Fraction(fib(2 * n + k) * fib(2 * n - k), sp.factorial(k) * 2**n)
                     for k in range(1, 2 * n + 1))
        assert abs(t.value - mpmath.mpf(manual.numerator) / manual.denominator) < 1e-40


@pytest.mark.parametrize("n", [1, 2, 3])
def test_proex1_standard_variant_matches(n):
    lhs = proex1_lhs(n, 40)
    assert lhs.tail_bound < 1e-20
    assert abs(lhs.value - proex1_rhs(n, LucasVariant.STANDARD)) < 1e-30
    assert abs(lhs.value - proex1_rhs(n, "PAPER")) > 0.1


@pytest.mark.parametrize("n, value", [(1, "1.32725"), (2, "4.10019"), (3, "13.8633")])
def test_proex1_frozen_values(n, value):
    assert mpmath.nstr(proex1_lhs(n, 40).value, 6) == value


def test_proex1_domain():
    with pytest.raises(ValueError):
        proex1_lhs(0, 10)
    with pytest.raises(ValueError):
        proex1_rhs(6)
    with pytest.raises(ValueError):
        proex1_lhs(1, 0)


def test_gf_coefficients():
    assert gf_fib_coeffs(5) == [1, 1, 2, 3, 5, 8]
    assert gf_fib_coeffs(0) == [1]
    z = sp.symbols("z")
    ref = sp.Poly(sp.series(1 / (1 - z - z**2), z, 0, 31).removeO(), z).all_coeffs()[::-1]
    assert gf_fib_coeffs(30) == [int(c) for c in ref]
    assert all(c == fib(n + 1) for n, c in enumerate(gf_fib_coeffs(100)))


def test_proex1_small_examples():
    assert proex1_lhs(1, 1).value == 1
    assert proex1_lhs(1, 2).value == 1
    p = proex1_lhs(2, 30)
    assert p.tail_bound / p.value < 1e-20
    assert abs(p.value - proex1_lhs(2, 60).value) < 1e-20


def test_proex1_stabilizes():
    for n in (1, 3, 5):
        prev = proex1_lhs(n, 1)
        bounds = []
        for K in range(1, 60):
            nxt = proex1_lhs(n, K + 1)
            # values are rounded to the working precision
            eps = abs(prev.value) * mpmath.mpf(10) ** (2 - WORKING_DPS)
            assert abs(nxt.value - prev.value) <= prev.tail_bound + eps
            bounds.append(prev.tail_bound)
            prev = nxt
        assert bounds[-1] < 1e-25
        assert all(b >= 0 for b in bounds)
        tail = bounds[4 * n:]
        assert all(a > b for a, b in zip(tail, tail[1:]))


def test_partial_adds_exactly_one_term():
    x = Fraction(1, 16)
    for N in range(0, 30):
        step = binom_fib_partial(x, N + 1).value - binom_fib_partial(x, N).value
        term = comb(2 * N + 2, N + 1) * fib(N + 1) * x ** (N + 1)
        assert abs(step - mpmath.mpf(term.numerator) / term.denominator) < mpmath.mpf(10) ** -45


@pytest.mark.parametrize("x", ["1/8", "1/16", "1/23"])
def test_binom_partial_monotone(x):
    vals = [binom_fib_partial(x, N).value for N in range(80)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("x", ["1/8", "1/16", "1/23"])
def test_binom_partial_60_within_1e10(x):
    # fails at 1/8: the terms decay like (4 phi / 8)^n, so 60 terms leave ~4e-7
    assert abs(binom_fib_partial(x, 60).value - binom_fib_closed(x)) < 1e-10


def test_binom_x23_examples():
    p40 = binom_fib_partial("1/23", 40).value
    p80 = binom_fib_partial("1/23", 80).value
    assert abs(p40 - p80) < 1e-12
    assert abs(binom_fib_closed("1/23") - binom_fib_partial("1/23", 60).value) < 1e-12


def test_gf_matches_fib_to_200():
    assert gf_fib_coeffs(200) == [fib(k + 1) for k in range(201)]
    assert gf_fib_coeffs(4) == [1, 1, 2, 3, 5]

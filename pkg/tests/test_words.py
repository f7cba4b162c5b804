import math
import random

import pytest
from hypothesis import given, strategies as st

from fibword.fibnum import fib
from fibword.words import (
    DensityMethod,
    DensityValue,
    Word,
    correlation,
    correlation_naive,
    df_pair,
    fib_word,
    fib_words_up_to,
    grid_growth,
    grid_length,
    grid_word,
    ones_density,
    pisano_period,
    residue_density,
    rev_fib_word,
    std_fib_word,
)


@pytest.mark.parametrize(
    "n, expected",
    [(1, "1"), (2, "0"), (3, "01"), (5, "01001"), (7, "0100101001001"), (8, "010010100100101001010")],
)
def test_fib_word_table_rows(n, expected):
    assert fib_word(n).symbols == expected


def test_fib_word_rejects_zero():
    with pytest.raises(ValueError):
        fib_word(0)


def test_fib_word_lengths_and_recursion():
    for n in range(1, 31):
        w = fib_word(n)
        assert len(w) == fib(n)
        assert w.index == n
        if n >= 3:
            assert w.symbols == fib_word(n - 1).symbols + fib_word(n - 2).symbols


def test_ones_count():
    assert fib_word(1).count("1") == 1
    assert fib_word(2).count("1") == 0
    for n in range(3, 26):
        assert fib_word(n).count("1") == fib(n - 2)


def test_classic_convention():
    assert fib_word(0, convention="classic").symbols == "0"
    assert fib_word(1, convention="classic").symbols == "01"
    assert fib_word(4, convention="classic").symbols == "01001010"


def test_fib_words_up_to_matches():
    ws = fib_words_up_to(12)
    assert [w.symbols for w in ws] == [fib_word(k).symbols for k in range(1, 13)]
    with pytest.raises(ValueError):
        fib_words_up_to(0)


def test_word_empty_repr():
    assert Word("").is_empty
    assert "ε" in repr(Word(""))


def test_std_fib_word():
    assert std_fib_word("u", "v", 4).symbols == "vuv"
    assert std_fib_word("u", "v", 1).symbols == "u"
    assert std_fib_word("1", "0", 6).symbols == "01001010"
    for n in range(1, 21):
        assert std_fib_word("1", "0", n) == fib_word(n)


def test_rev_fib_word():
    assert rev_fib_word("u", "v", 5).symbols == "uvvuv"
    assert rev_fib_word("u", "v", 2).symbols == "v"
    for n in range(1, 15):
        assert len(rev_fib_word("ab", "c", n)) == len(std_fib_word("ab", "c", n))


def test_two_term_rejects_empty():
    with pytest.raises(ValueError):
        std_fib_word("", "0", 3)
    with pytest.raises(ValueError):
        rev_fib_word("1", "", 3)


def test_grid_word_examples():
    assert grid_word(1, 1, "a", "b").symbols == "ab"
    assert grid_word(0, 7, "a", "b").symbols == "a"
    assert len(grid_word(2, 2, "a", "b")) == 6


def _grid_word_recursive(u, v, a, b, memo):
    # direct transcription of the recursion, memoised
    if (u, v) in memo:
        return memo[u, v]
    if u == 0:
        r = a
    elif v == 0:
        r = b
    else:
        r = _grid_word_recursive(u - 1, v, a, b, memo) + _grid_word_recursive(u, v - 1, a, b, memo)
    memo[u, v] = r
    return r


def test_grid_word_matches_recursion():
    for u in range(6):
        for v in range(6):
            assert grid_word(u, v, "a", "bb").symbols == _grid_word_recursive(u, v, "a", "bb", {})


def test_grid_length_binomial():
    for u in range(21):
        for v in range(21):
            assert grid_length(u, v) == math.comb(u + v, u)


def test_grid_word_size_guard():
    with pytest.raises(ValueError):
        grid_word(20, 20, "a", "b")


@pytest.mark.parametrize(
    "u, v, bits", [("01", "01", (1, 0)), ("010", "0100101", (1, 0, 1))]
)
def test_correlation_examples(u, v, bits):
    assert correlation(u, v).bits == bits


def test_correlation_self_overlap():
    for w in ["0", "0110", "abcab"]:
        assert correlation(w, w).bits[0] == 1


def test_correlation_argument_order():
    with pytest.raises(ValueError):
        correlation("0101", "01")


def test_correlation_equivalence_random():
    rng = random.Random(1234)
    for _ in range(1000):
        m = rng.randint(1, 32)
        n = rng.randint(1, m)
        u = "".join(rng.choice("01") for _ in range(n))
        v = "".join(rng.choice("01") for _ in range(m))
        assert correlation(u, v) == correlation_naive(u, v)


@given(st.text("ab", min_size=1, max_size=12), st.text("ab", max_size=12))
def test_correlation_equivalence_property(u, extra):
    v = u[::-1] + extra
    if len(v) >= len(u):
        assert correlation(u, v) == correlation_naive(u, v)


def test_ones_density():
    assert ones_density(fib_word(5)).value == pytest.approx(0.4)
    assert ones_density("0000").value == 0.0
    assert ones_density(fib_word(30)).value == pytest.approx(0.381966, abs=1e-5)
    assert ones_density("1").method is DensityMethod.EMPIRICAL


def test_density_value_bounds():
    with pytest.raises(ValueError):
        DensityValue(1.5, DensityMethod.EMPIRICAL)


@pytest.mark.parametrize(
    "n, m, printed", [(1, 1, "0.3819"), (8, 8, "0.0477"), (9, 6, "0.1273"), (6, 6, "0.0636"), (2, 4, "0.1909")]
)
def test_df_pair_display(n, m, printed):
    d = df_pair(n, m)
    assert d.method is DensityMethod.CLOSED_FORM
    assert d.display() == printed


def test_df_pair_symmetric():
    for n in range(1, 13):
        for m in range(1, 13):
            assert df_pair(n, m) == DensityValue(df_pair(m, n).value, DensityMethod.CLOSED_FORM, (n, m))


def _residue_oracle(modulus):
    # no period detection: the Pisano period never exceeds 6 * modulus
    seen = set()
    a, b = 0, 1
    for _ in range(6 * modulus + 1):
        seen.add(a)
        a, b = b, (a + b) % modulus
    return len(seen) / modulus


@pytest.mark.parametrize("m, lam", [(2, 1), (10, 1), (5, 1), (8, 1), (11, 1), (3, 3), (2, 5), (13, 1)])
def test_residue_density_against_oracle(m, lam):
    assert residue_density(m, lam).value == _residue_oracle(m**lam)


def test_residue_density_frozen_values():
    # frozen from the oracle above
    assert residue_density(2, 1).value == 1.0
    assert residue_density(10, 1).value == 1.0
    assert residue_density(5, 1).value == 1.0
    assert residue_density(11, 1).value == pytest.approx(7 / 11)


def test_pisano_period_values():
    assert [pisano_period(m) for m in (2, 3, 5, 10)] == [3, 8, 20, 60]


def test_residue_density_guard():
    with pytest.raises(OverflowError):
        residue_density(10, 7)


def test_grid_growth_examples():
    assert grid_growth(1) == pytest.approx(math.log(2))
    assert grid_growth(4) == pytest.approx(math.log(70) / 4)
    assert grid_growth(2000) == pytest.approx(1.386, abs=0.01)


def test_grid_growth_against_exact_binomial():
    for N in (1, 7, 50, 300):
        exact = math.log(math.comb(2 * N, N)) / N
        assert grid_growth(N) == pytest.approx(exact, rel=1e-12)

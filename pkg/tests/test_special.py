"""Rising factorials, harmonic and Euler numbers, Gamma-ratio shifts, and the
classical central-binomial congruences."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.arith import InvalidPrime
from supercong.special import (
    check_morley,
    check_wolstenholme,
    euler_number,
    euler_numbers,
    gamma_ratio_half_shift,
    h2,
    inv_pochhammer_int,
    pochhammer,
)

RATIONALS = st.fractions(min_value=-20, max_value=20, max_denominator=12)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(17, 3), 0) == 1
        assert pochhammer(0, 0) == 1

    def test_examples(self):
        assert pochhammer(1, 4) == 24
        assert pochhammer(Fraction(-1, 2), 2) == Fraction(-1, 4)

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)

    @given(RATIONALS, st.integers(0, 12), st.integers(0, 12))
    def test_splitting(self, a, j, k):
        assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)

    @given(st.integers(0, 40))
    def test_half_base_vs_central_binomial(self, k):
        assert pochhammer(Fraction(1, 2), k) / math.factorial(k) == Fraction(
            math.comb(2 * k, k), 4**k
        )

    @given(st.integers(0, 40))
    def test_negative_half_base_vs_central_binomial(self, k):
        assert pochhammer(Fraction(-1, 2), k) / math.factorial(k) == Fraction(
            -math.comb(2 * k, k), 4**k * (2 * k - 1)
        )


class TestInvPochhammerInt:
    def test_convention(self):
        assert inv_pochhammer_int(-1) == 0
        assert inv_pochhammer_int(-7) == 0
        assert inv_pochhammer_int(0) == 1
        assert inv_pochhammer_int(3) == Fraction(1, 6)


class TestH2:
    def test_values(self):
        assert h2(0) == 0
        assert h2(1) == 1
        assert h2(2) == Fraction(5, 4)
        assert h2(3) == Fraction(49, 36)

    @given(st.integers(0, 100))
    def test_matches_direct_sum(self, n):
        assert h2(n) == sum(Fraction(1, j * j) for j in range(1, n + 1))


class TestEulerNumbers:
    def test_tables(self):
        assert euler_numbers(0).values == (1,)
        assert euler_numbers(4).values == (1, -1, 5)
        assert euler_numbers(6).values == (1, -1, 5, -61)

    def test_known_larger_values(self):
        assert euler_number(8) == 1385
        assert euler_number(10) == -50521
        assert euler_number(12) == 2702765

    def test_odd_index_is_zero(self):
        table = euler_numbers(10)
        assert table.value(7) == 0
        assert euler_number(9) == 0

    def test_out_of_table_range(self):
        with pytest.raises(IndexError):
            euler_numbers(4).value(6)

    def test_rejects_odd_max_index(self):
        with pytest.raises(ValueError):
            euler_numbers(5)

    @given(st.integers(1, 20))
    def test_defining_recurrence(self, half_n):
        # sum_{k=0..n/2} C(n,2k) E_2k == 0 for every even n >= 2
        n = 2 * half_n
        table = euler_numbers(n)
        assert sum(math.comb(n, 2 * k) * table.value(2 * k) for k in range(half_n + 1)) == 0


class TestGammaRatioHalfShift:
    def test_examples(self):
        assert gamma_ratio_half_shift(3) == -3
        assert gamma_ratio_half_shift(5) == 5
        assert gamma_ratio_half_shift(7) == -7

    def test_exact_law_all_odd(self):
        # holds for every odd p >= 3, prime or not
        for p in range(3, 200, 2):
            assert gamma_ratio_half_shift(p) == p * (-1) ** ((p - 1) // 2)

    def test_rejects_even_and_small(self):
        with pytest.raises(ValueError):
            gamma_ratio_half_shift(4)
        with pytest.raises(ValueError):
            gamma_ratio_half_shift(1)


class TestClassicalCongruences:
    def test_wolstenholme_at_5(self):
        rep = check_wolstenholme(5)
        assert rep.lhs - rep.rhs == 250  # C(10,5) - 2 = 2 * 5^3
        assert rep.achieved_valuation == 3 and rep.passed

    def test_wolstenholme_scan(self):
        for p in (7, 11, 13, 97, 199):
            assert check_wolstenholme(p).passed

    def test_morley_at_5(self):
        rep = check_morley(5)
        assert rep.lhs == 6 and rep.rhs == 256
        assert rep.achieved_valuation == 3 and rep.passed

    def test_morley_scan(self):
        for p in (7, 11, 13, 97, 199):
            assert check_morley(p).passed

    def test_domain_floor(self):
        for fn in (check_wolstenholme, check_morley):
            with pytest.raises(InvalidPrime):
                fn(3)
            with pytest.raises(InvalidPrime):
                fn(9)

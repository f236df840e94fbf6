import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import system
from coverfrac import (
    CoverError,
    DegreeExceedsMultiplicityError,
    NotAPeriodError,
    RedundantClassError,
    SparsePolynomial,
    UnityPhase,
    average_equality_check,
    complete_to_cover,
    lcm_moduli,
    lemma1_check,
    lemma2_constancy_check,
    lemma3_check,
    product_identity_check,
    random_system,
)
from coverfrac.identities import (
    DEFAULT_SAMPLES,
    lemma1_sides,
    lemma2_sums,
    lemma3_sides,
    product_identity_residual,
    product_identity_sides,
)
from oracles import naive_table, subsets
from strategies import systems

B_TABLE = [2, 1, 1, 1, 1, 2, 2, 1, 1, 2, 1, 1]


def e(x):
    return cmath.exp(2j * math.pi * x)


class TestUnityPhase:
    def test_reduced_mod_one(self):
        assert UnityPhase(Fraction(7, 4)).value == Fraction(3, 4)
        assert UnityPhase(Fraction(-1, 3)).value == Fraction(2, 3)

    def test_exact_quarter_turns(self):
        assert UnityPhase(Fraction(0)).to_complex() == 1
        assert UnityPhase(Fraction(5, 2)).to_complex() == -1
        assert UnityPhase(Fraction(1, 4)).to_complex() == 1j
        assert UnityPhase(Fraction(-1, 4)).to_complex() == -1j

    def test_addition(self):
        p = UnityPhase(Fraction(2, 3)) + UnityPhase(Fraction(1, 2))
        assert p.value == Fraction(1, 6)
        assert abs(p.to_complex() - e(1 / 6)) < 1e-15


class TestSparsePolynomial:
    def test_degree_and_coefficients(self):
        x1, x2 = SparsePolynomial.variable(3, 1), SparsePolynomial.variable(3, 2)
        f = (x1 + x2) ** 2
        assert f.degree == 2
        assert f.coefficient((1, 1, 0)) == 2
        assert f.coefficient((2, 0, 0)) == 1
        assert f.coefficient((0, 0, 1)) == 0

    def test_zero_terms_dropped(self):
        x1 = SparsePolynomial.variable(2, 1)
        f = x1 + SparsePolynomial.variable(2, 1, -1)
        assert f.terms == {} and f.degree == 0

    def test_at_subset_matches_direct_evaluation(self):
        f = SparsePolynomial.linear([0.5, 1 / 3, 0.25], const=-1) ** 3
        for I in subsets([1, 2, 3]):
            x = [1 if s in I else 0 for s in (1, 2, 3)]
            direct = (0.5 * x[0] + x[1] / 3 + 0.25 * x[2] - 1) ** 3
            assert abs(f.at_subset(set(I)) - direct) < 1e-12

    def test_bad_exponents(self):
        with pytest.raises(CoverError):
            SparsePolynomial(2, {(1,): 1})


class TestLemma1:
    def test_single_class(self):
        f = SparsePolynomial.variable(1, 1)
        lhs, rhs = lemma1_sides(system((0, 1)), [1], f, 0)
        assert lhs == -1 and rhs == -1
        assert lemma1_check(system((0, 1)), [1], f, 0)

    def test_erdos_constant_f(self, B):
        lhs, rhs = lemma1_sides(B, [1] * 5, SparsePolynomial.constant(5), 0)
        assert abs(lhs) < 1e-9 and rhs == 0

    def test_erdos_x1x2_beyond_degree_gate(self, B):
        f = SparsePolynomial.variable(5, 1) * SparsePolynomial.variable(5, 2)
        with pytest.raises(DegreeExceedsMultiplicityError):
            lemma1_check(B, [1] * 5, f, 0)
        # I_0 = {1, 2}, so the monomial x1 x2 is exactly c(I_0); still equal
        lhs, rhs = lemma1_sides(B, [1] * 5, f, 0, enforce_degree=False)
        expected = -((e(1 / 4) - 1) * (e(5 / 6) - 1) * (e(7 / 12) - 1))
        assert abs(rhs - expected) < 1e-12
        assert abs(lhs - rhs) < 1e-9

    def test_length_mismatch(self, B):
        with pytest.raises(CoverError):
            lemma1_check(B, [1], SparsePolynomial.constant(5), 0)

    @settings(max_examples=40, deadline=None)
    @given(systems(min_k=1, max_k=7), st.integers(-30, 30))
    def test_constant_f_vanishes_on_covers(self, A, z):
        A = complete_to_cover(A, 1)
        if len(A) > 10:
            return
        lhs, rhs = lemma1_sides(A, [1] * len(A), SparsePolynomial.constant(len(A)), z)
        assert rhs == 0 and abs(lhs) < 1e-9


class TestLemma2:
    def test_erdos(self, B):
        assert lemma2_constancy_check(B, 1, 5, [1] * 4)

    def test_double_cover(self):
        assert lemma2_constancy_check(system((0, 1), (0, 2), (1, 2)), 2, 3, [1, 1])

    def test_single_class(self):
        sums = lemma2_sums(system((0, 1)), 1, 1, [])
        assert sums == {Fraction(0): {0: 1}}
        assert lemma2_constancy_check(system((0, 1)), 1, 1, [])

    def test_multipliers_create_offsets(self, B):
        # 2/3 = (alpha + r)/2 needs alpha = 1/3 when t has modulus 2
        A = system((0, 3), (1, 3), (2, 3), (0, 2), (1, 2))
        sums = lemma2_sums(A, 2, 5, [1, 1, 1, 1])
        assert Fraction(1, 3) in sums
        assert lemma2_constancy_check(A, 2, 5, [1, 1, 1, 1])
        assert lemma2_constancy_check(A, 2, 5, [2, 1, 3, 1])

    def test_gates(self, B):
        with pytest.raises(RedundantClassError):
            lemma2_constancy_check(system((0, 1), (0, 2), (1, 2)), 1, 1, [1, 1])
        with pytest.raises(CoverError):
            lemma2_constancy_check(B, 1, 5, [1, 0, 1, 1])


class TestLemma3:
    def test_erdos_against_direct_evaluation(self, B):
        # left side: classes not containing 7
        lhs = (1 - e(-7 / 2)) * (1 - e(-7 / 3)) * (1 - e(-6 / 4)) * (1 - e(-2 / 6))
        rhs = 12
        for j in range(1, 13):
            if (j - 7) % 12:
                rhs *= (1 - e((j - 7) / 12)) ** (B_TABLE[j % 12] - 1)
        assert abs(lhs - rhs) < 1e-9 * abs(rhs)
        got_l, got_r = lemma3_sides(B, 1, 5, 7)
        assert abs(got_l - lhs) < 1e-12 and abs(got_r - rhs) < 1e-9 * abs(rhs)
        assert lemma3_check(B, 1, 5, 7)

    def test_z_independence(self, B):
        l7, _ = lemma3_sides(B, 1, 5, 7)
        l19, _ = lemma3_sides(B, 1, 5, 19)
        lneg, _ = lemma3_sides(B, 1, 5, -5)
        assert abs(l7 - l19) < 1e-9 and abs(l7 - lneg) < 1e-9

    def test_trivial(self):
        lhs, rhs = lemma3_sides(system((0, 1), (0, 1)), 2, 2, 0)
        assert lhs == 1 and rhs == 1

    def test_z_outside_class(self, B):
        with pytest.raises(CoverError, match="not in class"):
            lemma3_check(B, 1, 5, 8)

    def test_period_gate(self, B):
        with pytest.raises(NotAPeriodError):
            lemma3_check(B, 1, 1, 0)


class TestProductIdentity:
    def test_erdos_at_zero(self, B):
        assert product_identity_sides(B, 5, 0j) == (1, 1)

    def test_erdos_at_half(self, B):
        y = 0.5
        lhs = ((1 - y**6) * (1 - y**4 * e(0)) * (1 - y**3 * e(1 / 4))
               * (1 - y**2 * e(5 / 6)) * (1 - y * e(7 / 12)))
        rhs = 1
        for j in range(1, 13):
            rhs *= (1 - y * e(j / 12)) ** B_TABLE[j % 12]
        got_l, got_r = product_identity_sides(B, 5, y)
        assert abs(got_l - lhs) < 1e-12 and abs(got_r - rhs) < 1e-12
        assert abs(lhs - rhs) < 1e-9

    def test_default_samples(self, B):
        assert len(DEFAULT_SAMPLES) == 5
        assert product_identity_check(B, 5)

    def test_negative_control(self):
        A = system((0, 2), (0, 3))
        assert naive_table([(0, 2), (0, 3)]) == [2, 0, 1, 1, 1, 0]
        with pytest.raises(NotAPeriodError):
            product_identity_check(A, 1)
        residual = product_identity_residual(A, 1, [0.5], enforce_period=False)
        # (1 - 1/8)(1 - 1/4) = 21/32 against 1 - 1/8 = 7/8
        assert residual == pytest.approx(abs(21 / 32 - 7 / 8) / (1 + 7 / 8))
        assert not product_identity_check(A, 1, enforce_period=False)

    @settings(max_examples=40, deadline=None)
    @given(systems(min_k=1, max_k=6, max_modulus=8), st.data())
    def test_holds_whenever_modulus_is_period(self, A, data):
        from coverfrac import is_period
        t = data.draw(st.integers(1, len(A)))
        if is_period(A, A[t].n):
            assert product_identity_check(A, t)


class TestAverage:
    def test_erdos(self, B):
        assert sum(B_TABLE) == 16
        assert Fraction(16, 12) == Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 4) \
            + Fraction(1, 6) + Fraction(1, 12)
        assert average_equality_check(B)

    def test_trivial(self):
        assert average_equality_check(system((0, 1)))

    def test_seeded(self):
        for seed in range(100):
            A = random_system(10, 12, seed)
            if lcm_moduli(A) <= 10**4:
                table = naive_table(list(zip(A.residues, A.moduli)))
                assert Fraction(sum(table), len(table)) == sum(
                    (Fraction(1, n) for n in A.moduli), Fraction(0))
                assert average_equality_check(A)

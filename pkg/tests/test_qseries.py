"""q-series blocks: q-integers, q-shifted factorials, term sequences, simplices."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcongruence.padic import pochhammer_rat
from qcongruence.poly import QPoly
from qcongruence.qseries import (
    QMonomial,
    TermSpec,
    q_integer,
    q_integer_ratfun,
    q_pochhammer,
    simplex_sum,
    term,
)
from qcongruence.ratfun import RatFun

q = QPoly.q_power(1)

scales = st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(bool)
monomials = st.builds(QMonomial, scales, st.integers(min_value=-4, max_value=4))


class TestQInteger:
    def test_one(self):
        assert q_integer(1) == QPoly((1,))

    def test_three(self):
        assert q_integer(3) == QPoly((1, 1, 1))

    def test_telescoping(self):
        assert (1 - q) * q_integer(7) == 1 - q**7

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            q_integer(0)

    def test_signed_variants(self):
        assert q_integer_ratfun(4) == RatFun(q_integer(4))
        assert q_integer_ratfun(0).is_zero
        # [-s] = -(1 + ... + q^{s-1}) / q^s
        assert q_integer_ratfun(-3) == RatFun(-q_integer(3), QPoly.q_power(3))


class TestPochhammer:
    def test_empty_product(self):
        assert q_pochhammer(QMonomial(F(7), 2), 3, 0) == RatFun(1)

    def test_direct_product(self):
        want = RatFun((1 - q) * (1 - q**4))
        assert q_pochhammer(QMonomial.q(1), 3, 2) == want

    def test_scaled_argument(self):
        assert q_pochhammer(QMonomial(F(2), 1), 3, 1) == RatFun(1 - 2 * q)

    def test_negative_power_argument(self):
        # (q^-2; q)_1 = 1 - q^-2 = (q^2 - 1)/q^2
        got = q_pochhammer(QMonomial.q(-2), 1, 1)
        assert got == RatFun(q**2 - 1, q**2)

    @settings(max_examples=80, deadline=None, derandomize=True)
    @given(monomials, st.integers(min_value=1, max_value=3),
           st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4))
    def test_splitting_law(self, x, step, m, n):
        whole = q_pochhammer(x, step, m + n)
        left = q_pochhammer(x, step, m)
        right = q_pochhammer(x.shifted(step * m), step, n)
        assert whole == left * right


class TestTerms:
    def test_central_k0(self):
        assert term(TermSpec.A(), 0) == RatFun(1)

    def test_central_k1(self):
        want = RatFun(q_integer(7) * (1 - q) ** 6 * q**3, (1 - q**3) ** 6)
        assert term(TermSpec.A(), 1) == want

    def test_parametrized_k1(self):
        a, b = F(2), F(3)
        num = (
            (1 - 2 * q) * (1 - F(1, 2) * q) * (1 - 3 * q) * (1 - F(1, 3) * q)
            * (1 - q) ** 2 * q**3
        )
        den = (
            (1 - F(1, 2) * q**3) * (1 - 2 * q**3) * (1 - F(1, 3) * q**3)
            * (1 - 3 * q**3) * (1 - q**3) ** 2
        )
        want = RatFun(q_integer(7)) * RatFun(num, den)
        assert term(TermSpec.B(a, b), 1) == want

    def test_parametrized_degenerates_to_central(self):
        spec = TermSpec.B(F(1), F(1))
        for k in range(5):
            assert term(spec, k) == term(TermSpec.A(), k)

    def test_q_power_specialization(self):
        # a = q^4 enters as an exact power shift
        spec = TermSpec.beta(QMonomial.q(4), F(3), F(5))
        value = term(spec, 1)
        assert isinstance(value, RatFun)
        assert not value.is_zero

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            TermSpec.B(F(0), F(2))

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            TermSpec("B", a=QMonomial.of(F(2)))
        with pytest.raises(ValueError):
            TermSpec("A", a=QMonomial.of(F(2)))
        with pytest.raises(ValueError):
            TermSpec("nope")

    def test_q1_bridge_to_rational_pochhammer(self):
        # at q = 1 the central term collapses to (6k+1)((1/3)_k/(1)_k)^6
        for k in range(9):
            got = term(TermSpec.A(), k).evaluate(1)
            ratio = pochhammer_rat(F(1, 3), k) / pochhammer_rat(F(1), k)
            assert got == (6 * k + 1) * ratio**6


class TestSimplexSum:
    def test_single_tuple(self):
        spec = TermSpec.A()
        assert simplex_sum(spec, 2, 0) == term(spec, 0) ** 2

    def test_three_tuples_by_hand(self):
        # terms 1, x with x = 5: tuples (0,0), (1,0), (0,1) give 1 + 2x
        assert simplex_sum([1, 5], 2, 1) == RatFun(11)
        assert simplex_sum([1, 5], 2, 2) == RatFun(36)

    def test_weight_transform(self):
        doubled = simplex_sum([1, 5], 2, 1, weight=lambda k, v: 2 * v)
        assert doubled == RatFun(4 + 4 * 10)

    def test_matches_cauchy_resummation(self):
        # independent summation order: diagonal Cauchy blocks
        rng = random.Random(9)
        values = [RatFun(QPoly([F(rng.randint(-4, 4), rng.randint(1, 4))
                                for _ in range(3)]))
                  for _ in range(5)]
        bound = 4
        direct = simplex_sum(values, 2, bound)
        cauchy = RatFun(0)
        for s in range(bound + 1):
            for i in range(s + 1):
                cauchy = cauchy + values[i] * values[s - i]
        assert direct == cauchy

    def test_dimension_three(self):
        vals = [1, 2, 3]
        # brute force list of all triples with sum <= 2
        total = RatFun(0)
        for i in range(3):
            for j in range(3 - i):
                for k in range(3 - i - j):
                    total = total + RatFun(vals[i] * vals[j] * vals[k])
        assert simplex_sum(vals, 3, 2) == total

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            simplex_sum([1], 0, 1)
        with pytest.raises(ValueError):
            simplex_sum([1], 2, -1)

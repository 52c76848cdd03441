"""EpsJet: truncated arithmetic at order ε² and limit extraction."""

import random
from fractions import Fraction as F
from math import comb

import pytest

from qcongruence.jet import EpsJet, JetLimitError
from qcongruence.poly import QPoly
from qcongruence.ratfun import RatFun

q = QPoly.q_power(1)


def jet(c0, c1, c2):
    return EpsJet(RatFun(c0), RatFun(c1), RatFun(c2))


class TestArithmetic:
    def test_one_plus_times_one_minus(self):
        left = jet(1, 1, 0)
        right = jet(1, -1, 0)
        assert left * right == jet(1, 0, -1)

    def test_geometric_inverse(self):
        # 1/(1-ε) truncates to 1 + ε + ε²
        inv = 1 / jet(1, -1, 0)
        assert inv == jet(1, 1, 1)

    def test_square_of_minus_eps(self):
        # substituting a = 1+ε into (1-a)² leaves exactly ε²
        a = EpsJet.one_plus_eps()
        assert (1 - a) ** 2 == jet(0, 0, 1)

    def test_division_requires_unit(self):
        with pytest.raises(ZeroDivisionError):
            jet(1, 0, 0) / jet(0, 1, 0)

    def test_div_mul_roundtrip(self):
        f = jet(QPoly((1, 2)), q, 3)
        g = jet(QPoly((2, 1)), 1, q)
        assert (f / g) * g == f

    def test_pow(self):
        a = EpsJet.one_plus_eps()
        assert a**3 == jet(1, 3, 3)
        assert a**-1 == jet(1, -1, 1)


class TestExtraction:
    def test_order_two(self):
        assert jet(0, 0, 5 * q).extract_limit(2) == RatFun(5 * q)

    def test_order_zero(self):
        assert jet(3, q, q**2).extract_limit(0) == RatFun(3)

    def test_nonvanishing_low_order_rejected(self):
        with pytest.raises(JetLimitError):
            jet(1, 0, q).extract_limit(2)
        with pytest.raises(JetLimitError):
            jet(0, q, q).extract_limit(2)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            jet(1, 0, 0).extract_limit(1)


class TestTaylorConsistency:
    def test_matches_binomial_expansion(self):
        # f(a, q) polynomial in a: jet of f(1+ε) must match the Taylor
        # coefficients sum_j C(j, i) c_j(q) computed independently.
        rng = random.Random(31)
        for _ in range(25):
            cs = [
                QPoly([F(rng.randint(-5, 5), rng.randint(1, 5))
                       for _ in range(rng.randint(0, 4))])
                for _ in range(4)
            ]
            a = EpsJet.one_plus_eps()
            value = EpsJet.constant(0)
            for j, c in enumerate(cs):
                value = value + RatFun(c) * a**j
            for i in range(3):
                expected = RatFun(0)
                for j, c in enumerate(cs):
                    expected = expected + comb(j, i) * RatFun(c)
                want = [value.c0, value.c1, value.c2][i]
                assert want == expected

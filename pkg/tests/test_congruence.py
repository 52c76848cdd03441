"""Rational-function congruences, the multiplier lemma, and the CRT certificate."""

import random
from fractions import Fraction as F

import pytest

from qcongruence.congruence import (
    CongruenceClaim,
    ModulusCollisionError,
    ParamPoint,
    UndecidableCongruenceError,
    congruent_mod,
    degeneracy_reason,
    lemma22_fractions,
    lemma22_moduli,
    lemma22_multipliers,
    reduce_mod,
    sample_pair,
    sample_param_point,
    verify_base_DE,
    verify_lemma22,
    verify_relations,
)
from qcongruence.poly import QPoly, cyclotomic
from qcongruence.ratfun import RatFun

q = QPoly.q_power(1)
PHI4 = cyclotomic(4)


class TestCongruentMod:
    def test_qn_is_one_mod_phi(self):
        claim = CongruenceClaim(RatFun.q_power(4), RatFun(1), PHI4)
        assert congruent_mod(claim)

    def test_inverse_of_one_minus_q(self):
        # (1-q)(1+q) = 1-q² ≡ 2 mod q²+1, so 1/(1-q) ≡ (1+q)/2
        lhs = RatFun(1, 1 - q)
        rhs = RatFun(QPoly((F(1, 2), F(1, 2))))
        assert congruent_mod(CongruenceClaim(lhs, rhs, PHI4))

    def test_refuted(self):
        assert not congruent_mod(CongruenceClaim(RatFun(q), RatFun(1), PHI4))

    def test_undecidable_is_an_error(self):
        lhs = RatFun(1, PHI4)
        with pytest.raises(UndecidableCongruenceError):
            congruent_mod(CongruenceClaim(lhs, RatFun(1), PHI4))

    def test_constant_modulus_trivial(self):
        claim = CongruenceClaim(RatFun(q), RatFun(1), QPoly((7,)))
        assert congruent_mod(claim)

    def test_zero_modulus_rejected(self):
        with pytest.raises(ValueError):
            CongruenceClaim(RatFun(1), RatFun(1), QPoly(()))

    def test_equivalence_relation(self):
        rng = random.Random(41)
        modulus = PHI4 * cyclotomic(5)

        def random_fun():
            num = QPoly([F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(4)])
            den = 1 + QPoly.monomial(rng.randint(1, 5), 1)
            return RatFun(num, den)

        for _ in range(15):
            f = random_fun()
            u, v = random_fun(), random_fun()
            g = f + RatFun(modulus) * u
            h = g + RatFun(modulus) * v
            assert congruent_mod(CongruenceClaim(f, f, modulus))
            assert congruent_mod(CongruenceClaim(f, g, modulus))
            assert congruent_mod(CongruenceClaim(g, f, modulus))
            assert congruent_mod(CongruenceClaim(f, h, modulus))


class TestReduceMod:
    def test_power_reduction(self):
        assert reduce_mod(RatFun.q_power(5), PHI4) == q

    def test_inverse_reduction(self):
        got = reduce_mod(RatFun(1, 1 - q), PHI4)
        assert got == QPoly((F(1, 2), F(1, 2)))

    def test_idempotent_on_reduced(self):
        f = QPoly((F(2, 3), F(1, 5)))
        assert reduce_mod(RatFun(f), PHI4) == f

    def test_multiplicative(self):
        rng = random.Random(43)
        modulus = PHI4 * cyclotomic(3)
        for _ in range(15):
            f = RatFun(
                QPoly([F(rng.randint(-6, 6)) for _ in range(5)]),
                QPoly((3, 0, 0, 1)),
            )
            g = RatFun(
                QPoly([F(rng.randint(-6, 6)) for _ in range(4)]),
                QPoly((5, 2)),
            )
            direct = reduce_mod(f * g, modulus)
            split = reduce_mod(
                RatFun(reduce_mod(f, modulus) * reduce_mod(g, modulus)), modulus
            )
            assert direct == split

    def test_non_invertible_denominator(self):
        with pytest.raises(UndecidableCongruenceError):
            reduce_mod(RatFun(1, PHI4), PHI4)


class TestRelations:
    def test_known_point(self):
        for t in (1, 2):
            assert verify_relations(F(2), F(3), t, 4)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            verify_relations(F(2), F(1, 2), 1, 4)
        with pytest.raises(ValueError):
            verify_relations(F(3), F(3), 1, 4)

    def test_bad_t(self):
        with pytest.raises(ValueError):
            verify_relations(F(2), F(3), 3, 4)

    def test_random_samples(self):
        rng = random.Random(7)
        for _ in range(12):
            a, b = sample_pair(rng)
            n = rng.choice((4, 7, 10, 13))
            t = rng.choice((1, 2))
            assert verify_relations(a, b, t, n)


class TestParamPoint:
    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            ParamPoint(F(2), F(2), F(5))
        with pytest.raises(ValueError):
            ParamPoint(F(1), F(2), F(5))
        with pytest.raises(ValueError):
            ParamPoint(F(2), F(3), F(1, 6))  # abc = 1
        with pytest.raises(ValueError):
            ParamPoint(F(15), F(3), F(5))  # a = bc
        with pytest.raises(ValueError):
            ParamPoint(F(7), F(4), F(1, 2))  # bc² = 1

    def test_sampler_avoids_degeneracy(self):
        rng = random.Random(3)
        for _ in range(50):
            p = sample_param_point(rng)
            assert degeneracy_reason(p.a, p.b, p.c) is None
            for coord in (p.a, p.b, p.c):
                assert 1 <= abs(coord.numerator) <= 9
                assert 1 <= coord.denominator <= 9


class TestLemma22:
    def test_special_values_at_c_zero(self):
        # substituting c = 0 by hand into the displayed formulas
        a, b = F(2), F(3)
        x = a * (1 + a**2 + a**4) - a**2 * (1 + a**2) * b - 0
        del x  # x has no stated shortcut; y and v do
        y_expect = a**2 * (1 + a**2) - a**3 * b
        point = ParamPoint(a, b, F(5))
        # evaluate the formulas re-derived with c treated as 0 via a second
        # transcription specialized by hand
        mult = lemma22_multipliers(point)
        y_full = (
            a**2 * (1 + a**2) * (1 + b**2 * point.c + b * point.c**2)
            - a**3 * (b + point.c + b * point.c + b**2 * point.c**2)
            - a * b * point.c * (1 + a**4)
        )
        assert mult.y == y_full
        assert y_expect == a**2 * (1 + a**2) - a**3 * b

    def test_double_entry_transcription(self):
        # a second, independently grouped transcription of all four formulas
        rng = random.Random(19)
        for _ in range(10):
            point = sample_param_point(rng)
            a, b, c = point.a, point.b, point.c
            x2 = (
                a + a**3 + a**5
                + (a + a**3 + a**5) * (b**2 * c + b * c**2)
                - (a**2 + a**4) * b - (a**2 + a**4) * c
                - (a**2 + a**4) * b * c - (a**2 + a**4) * b**2 * c**2
                - b * c + a**3 * b * c - a**6 * b * c
            )
            y2 = (
                (a**2 + a**4) * (1 + b**2 * c + b * c**2)
                - a**3 * b - a**3 * c - a**3 * b * c - a**3 * b**2 * c**2
                - a * b * c - a**5 * b * c
            )
            u2 = (
                -a
                - a * b * c * (b - c + b * c + b**3 * c - b**2 * c**2
                               + b**3 * c**2 + b**5 * c**2 - b**2 * c**3
                               - b**4 * c**3)
                + (b * c + a**2 * b * c)
                * (1 + b**2 * c - b * c**2 + b**4 * c**2 - b**3 * c**3)
            )
            v2 = (
                -a * b * c
                - a * b * c * (b**2 * c - b * c**2 + b**2 * c**2
                               + b**4 * c**2 - b**3 * c**3)
                + (b**2 * c**2 + a**2 * b**2 * c**2)
                * (1 + b**2 * c - b * c**2)
            )
            assert lemma22_multipliers(point) == (x2, y2, u2, v2)

    def test_v_vanishes_at_c_zero(self):
        # every summand of v carries a factor c: check the formula's c-free part
        a, b = F(2), F(3)
        v_at_c0 = -a * b * 0 * (1) + b**2 * 0 * (1 + a**2) * 1
        assert v_at_c0 == 0

    def test_known_points(self):
        point = ParamPoint(F(2), F(3), F(5))
        assert verify_lemma22(point, 4)
        assert verify_lemma22(point, 7)

    def test_degenerate_point_rejected(self):
        with pytest.raises(ValueError):
            ParamPoint(F(2), F(2), F(5))

    def test_random_points(self):
        rng = random.Random(29)
        for _ in range(8):
            point = sample_param_point(rng)
            assert verify_lemma22(point, 4)

    def test_moduli_pairwise_coprime_for_admissible_points(self):
        from qcongruence.poly import poly_gcd

        rng = random.Random(37)
        for _ in range(20):
            point = sample_param_point(rng)
            m1, m2, m3 = lemma22_moduli(point, 4)
            assert poly_gcd(m1, m2).degree == 0
            assert poly_gcd(m1, m3).degree == 0
            assert poly_gcd(m2, m3).degree == 0


class TestBaseDE:
    def test_known_point_and_swap(self):
        assert verify_base_DE(F(2), F(3), 4)
        assert verify_base_DE(F(3), F(2), 4)

    def test_degenerate(self):
        with pytest.raises(ValueError):
            verify_base_DE(F(2), F(1, 2), 4)

    def test_intermediate_identity(self):
        # (1-E)(-1+a-a²+a³-a⁴+a(1-a+a²)E) = -(1-a)² + (a-E)(-1+a²-a³+aE-a²E+a³E)
        # as an exact identity in the scalars a and E, at five random points
        rng = random.Random(53)
        for _ in range(5):
            a = F(rng.randint(2, 50), rng.randint(1, 7))
            e = F(rng.randint(2, 50), rng.randint(1, 7))
            left = (1 - e) * (-1 + a - a**2 + a**3 - a**4 + a * (1 - a + a**2) * e)
            right = -((1 - a) ** 2) + (a - e) * (
                -1 + a**2 - a**3 + a * e - a**2 * e + a**3 * e
            )
            assert left == right


class TestCrtCertificate:
    def test_multiplier_residues(self):
        # each multiplier fraction is 1 mod its own modulus and 0 mod the others
        rng = random.Random(61)
        one = RatFun(1)
        zero = RatFun(0)
        for _ in range(5):
            point = sample_param_point(rng)
            moduli = lemma22_moduli(point, 4)
            fractions = lemma22_fractions(point, 4)
            for i, frac in enumerate(fractions):
                for j, mod in enumerate(moduli):
                    want = one if i == j else zero
                    assert congruent_mod(CongruenceClaim(frac, want, mod))

    def test_recombination(self):
        from qcongruence.theorems import verify_crt_recombination

        rng = random.Random(67)
        for n in (4, 7):
            for _ in range(3):
                point = sample_param_point(rng)
                assert verify_crt_recombination(point, n)

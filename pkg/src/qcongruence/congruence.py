"""Congruence semantics for rational functions modulo polynomials.

A/B ≡ C/D (mod P) means P divides AD − CB while BD stays coprime to P.  A
denominator sharing a factor with the modulus makes the claim undecidable;
that is reported as an error distinct from False, because it signals an
unlucky parameter collision rather than a refuted statement.

Also here: the two-parameter reciprocal-root congruences, the three-modulus
multiplier identities feeding the polynomial Chinese remainder step, and the
double-pole rewriting identities, all checked at exact rational parameter
points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .poly import QPoly, poly_gcd, poly_xgcd
from .ratfun import RatFun


class UndecidableCongruenceError(ValueError):
    """A denominator shares a factor with the modulus; the claim is undecidable."""


class ModulusCollisionError(ValueError):
    """Sampled parameters made the three reference moduli share a factor."""


@dataclass(frozen=True)
class CongruenceClaim:
    """lhs ≡ rhs (mod modulus), all exact."""

    lhs: RatFun
    rhs: RatFun
    modulus: QPoly

    def __post_init__(self):
        if self.modulus.is_zero:
            raise ValueError("zero modulus")


def _check_decidable(f: RatFun, modulus: QPoly, side: str) -> None:
    if f.den.degree > 0 and poly_gcd(f.den, modulus).degree > 0:
        raise UndecidableCongruenceError(
            f"{side} denominator shares a factor with the modulus"
        )


def congruent_mod(claim: CongruenceClaim) -> bool:
    """Decide the congruence exactly.

    True iff the modulus divides the numerator of lhs − rhs in lowest terms.
    Raises UndecidableCongruenceError when either denominator shares a factor
    with the modulus.
    """
    modulus = claim.modulus
    _check_decidable(claim.lhs, modulus, "lhs")
    _check_decidable(claim.rhs, modulus, "rhs")
    if modulus.degree == 0:
        return True
    diff = claim.lhs - claim.rhs
    return diff.num.divrem(modulus)[1].is_zero


def reduce_mod(f: RatFun, modulus: QPoly) -> QPoly:
    """Canonical representative num·den⁻¹ of degree < deg(modulus)."""
    if modulus.is_zero:
        raise ZeroDivisionError("zero modulus")
    _check_decidable(f, modulus, "the")
    if modulus.degree == 0:
        return QPoly(())
    num = f.num % modulus
    den = f.den % modulus
    if den.is_zero:
        raise UndecidableCongruenceError("denominator vanishes modulo the modulus")
    g, s, _ = poly_xgcd(den, modulus)
    if g.degree != 0:
        raise UndecidableCongruenceError("denominator not invertible mod modulus")
    # g is monic hence the constant 1, so s is the inverse of den
    return num * s % modulus


@dataclass(frozen=True)
class ParamPoint:
    """A rational parameter triple outside the degeneracy locus.

    Excluded: any coordinate in {0, 1, -1}, equal coordinates, and the
    products ab, ac, bc, abc, bc² equal to 1 as well as a = bc: exactly the
    vanishing sets of the multiplier denominators.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))
        reason = degeneracy_reason(self.a, self.b, self.c)
        if reason:
            raise ValueError(f"degenerate parameter point: {reason}")


def degeneracy_reason(a: Fraction, b: Fraction, c: Fraction) -> str | None:
    """Why (a, b, c) is a degenerate triple, or None if it is admissible."""
    banned = {Fraction(0), Fraction(1), Fraction(-1)}
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value in banned:
            return f"{name} in {{0, 1, -1}}"
    if a == b:
        return "a = b"
    if a == c:
        return "a = c"
    if b == c:
        return "b = c"
    if a * b == 1:
        return "ab = 1"
    if a * c == 1:
        return "ac = 1"
    if b * c == 1:
        return "bc = 1"
    if a * b * c == 1:
        return "abc = 1"
    if a == b * c:
        return "a = bc"
    if b * c * c == 1:
        return "bc² = 1"
    return None


def pair_degeneracy_reason(a: Fraction, b: Fraction) -> str | None:
    """Why (a, b) is inadmissible for the two-parameter congruences."""
    banned = {Fraction(0), Fraction(1), Fraction(-1)}
    for name, value in (("a", a), ("b", b)):
        if value in banned:
            return f"{name} in {{0, 1, -1}}"
    if a == b:
        return "a = b"
    if a * b == 1:
        return "ab = 1"
    return None


def sample_fraction(rng) -> Fraction:
    """One draw of the small-height parameter distribution: n/d in {-9..9}\\{0}."""
    pool = [i for i in range(-9, 10) if i]
    return Fraction(rng.choice(pool), rng.choice(pool))


def sample_pair(rng) -> tuple[Fraction, Fraction]:
    while True:
        a, b = sample_fraction(rng), sample_fraction(rng)
        if pair_degeneracy_reason(a, b) is None:
            return a, b


def sample_param_point(rng) -> ParamPoint:
    while True:
        a, b, c = (sample_fraction(rng) for _ in range(3))
        if degeneracy_reason(a, b, c) is None:
            return ParamPoint(a, b, c)


# ----------------------------------------------------------------------
# Building blocks for moduli: u - q**n and 1 - u·q**n at rational u.

def u_minus_qn(u, n: int) -> QPoly:
    return QPoly((Fraction(u),)) - QPoly.q_power(n)

def one_minus_u_qn(u, n: int) -> QPoly:
    return QPoly((1,)) - QPoly.monomial(Fraction(u), n)


def verify_relations(a, b, t: int, n: int) -> bool:
    """Check the reciprocal-root congruence pair at exponent t·n.

    (1−b·Q)(b−Q)(−1−a²+a·Q) / ((a−b)(1−ab)) ≡ 1 mod (1−a·Q)(a−Q) with
    Q = q**(t·n), and the statement with a and b interchanged.
    """
    a, b = Fraction(a), Fraction(b)
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2")
    reason = pair_degeneracy_reason(a, b)
    if reason:
        raise ValueError(f"degenerate parameters: {reason}")
    e = t * n
    one = RatFun(1)
    for u, v in ((a, b), (b, a)):
        lhs = RatFun(
            one_minus_u_qn(v, e) * u_minus_qn(v, e)
            * (QPoly((-1 - u * u,)) + QPoly.monomial(u, e)),
            QPoly(((u - v) * (1 - u * v),)),
        )
        modulus = one_minus_u_qn(u, e) * u_minus_qn(u, e)
        if not congruent_mod(CongruenceClaim(lhs, one, modulus)):
            return False
    return True


class Lemma22Multipliers(NamedTuple):
    x: Fraction
    y: Fraction
    u: Fraction
    v: Fraction


def lemma22_multipliers(point: ParamPoint) -> Lemma22Multipliers:
    """The four scalar multipliers of the three-modulus congruence system."""
    a, b, c = point.a, point.b, point.c
    x = (
        a * (1 + a**2 + a**4) * (1 + b**2 * c + b * c**2)
        - a**2 * (1 + a**2) * (b + c + b * c + b**2 * c**2)
        - b * c * (1 - a**3 + a**6)
    )
    y = (
        a**2 * (1 + a**2) * (1 + b**2 * c + b * c**2)
        - a**3 * (b + c + b * c + b**2 * c**2)
        - a * b * c * (1 + a**4)
    )
    u = -a * (
        1
        + b * c * (
            b - c + b * c + b**3 * c - b**2 * c**2 + b**3 * c**2
            + b**5 * c**2 - b**2 * c**3 - b**4 * c**3
        )
    ) + b * c * (1 + a**2) * (1 + b**2 * c - b * c**2 + b**4 * c**2 - b**3 * c**3)
    v = -a * b * c * (
        1 + b**2 * c - b * c**2 + b**2 * c**2 + b**4 * c**2 - b**3 * c**3
    ) + b**2 * c**2 * (1 + a**2) * (1 + b**2 * c - b * c**2)
    return Lemma22Multipliers(x, y, u, v)


def lemma22_moduli(point: ParamPoint, n: int) -> tuple[QPoly, QPoly, QPoly]:
    """The three reference moduli (a−qⁿ)(1−a·qⁿ), (b−qⁿ)(1−bc·qⁿ), (c−qⁿ)."""
    a, b, c = point.a, point.b, point.c
    return (
        u_minus_qn(a, n) * one_minus_u_qn(a, n),
        u_minus_qn(b, n) * one_minus_u_qn(b * c, n),
        u_minus_qn(c, n),
    )


def lemma22_fractions(point: ParamPoint, n: int) -> tuple[RatFun, RatFun, RatFun]:
    """The three multiplier fractions, each claimed ≡ 1 mod its modulus."""
    a, b, c = point.a, point.b, point.c
    x, y, u, v = lemma22_multipliers(point)
    m1 = RatFun(
        u_minus_qn(b, n) * one_minus_u_qn(b * c, n) * u_minus_qn(c, n)
        * (QPoly((x,)) - QPoly.monomial(y, n)),
        QPoly((
            (a - b) * (a - c) * (a - b * c)
            * (1 - a * b) * (1 - a * c) * (1 - a * b * c),
        )),
    )
    m2 = RatFun(
        u_minus_qn(a, n) * one_minus_u_qn(a, n) * u_minus_qn(c, n)
        * (QPoly((u,)) - QPoly.monomial(v, n)),
        QPoly((
            (a - b) * (b - c) * (a - b * c)
            * (1 - a * b) * (1 - a * b * c) * (1 - b * c * c),
        )),
    )
    m3 = RatFun(
        u_minus_qn(a, n) * one_minus_u_qn(a, n)
        * u_minus_qn(b, n) * one_minus_u_qn(b * c, n),
        QPoly(((a - c) * (b - c) * (1 - a * c) * (1 - b * c * c),)),
    )
    return m1, m2, m3


def verify_lemma22(point: ParamPoint, n: int) -> bool:
    """All three multiplier fractions are ≡ 1 modulo their reference moduli."""
    moduli = lemma22_moduli(point, n)
    for i in range(3):
        for j in range(i + 1, 3):
            if poly_gcd(moduli[i], moduli[j]).degree != 0:
                raise ModulusCollisionError(
                    f"moduli {i} and {j} share a factor at this parameter point"
                )
    one = RatFun(1)
    return all(
        congruent_mod(CongruenceClaim(frac, one, mod))
        for frac, mod in zip(lemma22_fractions(point, n), moduli)
    )


def verify_base_DE(a, b, n: int) -> bool:
    """The double-pole rewriting congruences in a and, symmetrically, in b.

    (1−qⁿ)·{−1+a−a²+a³−a⁴+a(1−a+a²)qⁿ} / ((1−a)²(a−b)(1−ab)) reduces to
    (−1−a²+a·qⁿ) / ((a−b)(1−ab)) modulo (a−qⁿ)(1−a·qⁿ).
    """
    a, b = Fraction(a), Fraction(b)
    reason = pair_degeneracy_reason(a, b)
    if reason:
        raise ValueError(f"degenerate parameters: {reason}")
    for u, v in ((a, b), (b, a)):
        bracket = (
            QPoly((-1 + u - u**2 + u**3 - u**4,))
            + QPoly.monomial(u * (1 - u + u**2), n)
        )
        lhs = RatFun(
            (QPoly((1,)) - QPoly.q_power(n)) * bracket,
            QPoly(((1 - u) ** 2 * (u - v) * (1 - u * v),)),
        )
        rhs = RatFun(
            QPoly((-1 - u * u,)) + QPoly.monomial(u, n),
            QPoly(((u - v) * (1 - u * v),)),
        )
        modulus = u_minus_qn(u, n) * one_minus_u_qn(u, n)
        if not congruent_mod(CongruenceClaim(lhs, rhs, modulus)):
            return False
    return True

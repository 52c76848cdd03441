"""One verifier per statement.

Every verifier builds its left side by brute-force summation over the simplex
(the oracle side) and its right side from the displayed closed form, then
decides the claim with exact rational-function congruence arithmetic.  The
product factorization through the vanishing-window lemma is only ever used as
a cross-check, never as the primary evaluation path.

Statement identifiers double as the CLI vocabulary; see STATEMENT_IDS.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .congruence import (
    CongruenceClaim,
    ParamPoint,
    congruent_mod,
    lemma22_fractions,
    lemma22_moduli,
    one_minus_u_qn,
    pair_degeneracy_reason,
    u_minus_qn,
)
from .jet import EpsJet
from .poly import QPoly, cyclotomic, poly_crt
from .qseries import (
    QMonomial,
    TermSpec,
    q_integer,
    q_integer_ratfun,
    q_pochhammer,
    q_pochhammer_multi,
    simplex_sum,
    term,
)
from .ratfun import RatFun

STATEMENT_IDS: tuple[str, ...] = (
    "vanhamme-q-partial",
    "wei-a",
    "wei-b",
    "bachraoui-double",
    "relations",
    "thm-a",
    "thm-aa",
    "thm-c",
    "thm-d",
    "lemma-a",
    "lemma-b",
    "base-A",
    "base-B",
    "base-C",
    "wei-bb",
    "wei-cc",
    "wei-dd",
    "wei-ee",
    "wei-ef",
    "wei-ff",
    "wei-bbb",
    "wei-ccc",
    "wei-ddd",
    "wei-eee",
    "wei-fff",
    "wei-ggg",
    "wei-gg",
    "wei-hhh",
    "limit-2dim",
    "limit-3dim",
    "final-reduction",
)

CHAIN_IDS: tuple[str, ...] = (
    "wei-bb", "wei-cc", "wei-dd", "wei-ee", "wei-ef", "wei-ff",
    "wei-bbb", "wei-ccc", "wei-ddd", "wei-eee", "wei-fff", "wei-ggg",
    "wei-gg", "wei-hhh",
)


class WindowHypothesisError(ValueError):
    """The sequence fails to vanish on the required index window."""


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification job."""

    statement: str
    parameters: dict[str, str] = field(default_factory=dict)
    modulus_degree: int = 0
    ok: bool = False
    elapsed_ms: int = 0


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _n1mod3(n: int) -> int:
    _require(n >= 1 and n % 3 == 1, f"n must be ≡ 1 (mod 3), got {n}")
    return (n - 1) // 3


# ----------------------------------------------------------------------
# Shared right-hand-side ingredients.

def _qn(n: int) -> RatFun:
    return RatFun.q_power(n)


def _two_minus_qn(n: int) -> RatFun:
    return RatFun(QPoly((2,)) - QPoly.q_power(n))


def _bracket_n(n: int) -> RatFun:
    return RatFun(q_integer(n))


def r_sum(n: int) -> RatFun:
    """Sum over r of q^(3r-1)/[3r-1]² - q^(3r)/[3r]², r = 1 .. (n-1)/3."""
    m = _n1mod3(n)
    total = RatFun(0)
    for r in range(1, m + 1):
        total = total + _qn(3 * r - 1) / RatFun(q_integer(3 * r - 1)) ** 2
        total = total - _qn(3 * r) / RatFun(q_integer(3 * r)) ** 2
    return total


def _pure_cf(n: int, power: int) -> RatFun:
    """(q²;q³)_m**power / (q³;q³)_m**power with m = (n-1)/3."""
    m = (n - 1) // 3
    q = QMonomial.q
    return (q_pochhammer(q(2), 3, m) / q_pochhammer(q(3), 3, m)) ** power


def _param_cf(n: int, u, power: int) -> RatFun:
    """(u·q², q²/u, q²;q³)_m**power / (q³/u, u·q³, q³;q³)_m**power."""
    m = (n - 1) // 3
    u = QMonomial.of(u)
    q = QMonomial.q
    num = q_pochhammer_multi((u * q(2), q(2) / u, q(2)), 3, m)
    den = q_pochhammer_multi((q(3) / u, u * q(3), q(3)), 3, m)
    return (num / den) ** power


def cf_vanishing(n: int, b, c) -> RatFun:
    """(q⁴, q²/b, q²/c, bc·q²;q³)_m / (q, b·q³, c·q³, q³/(bc);q³)_m."""
    m = (n - 1) // 3
    b, c = QMonomial.of(b), QMonomial.of(c)
    q = QMonomial.q
    num = q_pochhammer_multi((q(4), q(2) / b, q(2) / c, b * c * q(2)), 3, m)
    den = q_pochhammer_multi((q(1), b * q(3), c * q(3), q(3) / (b * c)), 3, m)
    return num / den


def cf_paired(n: int, a, c) -> RatFun:
    """(q⁴, q², ac·q², c·q²/a;q³)_m / (c·q, c·q³, a·q³, q³/a;q³)_m."""
    m = (n - 1) // 3
    a, c = QMonomial.of(a), QMonomial.of(c)
    q = QMonomial.q
    num = q_pochhammer_multi((q(4), q(2), a * c * q(2), c * q(2) / a), 3, m)
    den = q_pochhammer_multi((c * q(1), c * q(3), a * q(3), q(3) / a), 3, m)
    return num / den


def _ff_cf(n: int, v, power: int) -> RatFun:
    """(q⁴, q², q²/v, v·q²;q³)_m**power / (q, q³, v·q³, q³/v;q³)_m**power."""
    m = (n - 1) // 3
    v = QMonomial.of(v)
    q = QMonomial.q
    num = q_pochhammer_multi((q(4), q(2), q(2) / v, v * q(2)), 3, m)
    den = q_pochhammer_multi((q(1), q(3), v * q(3), q(3) / v), 3, m)
    return (num / den) ** power


def _ff_half(n: int, u: Fraction, v: Fraction, power: int) -> RatFun:
    """One of the two displayed terms of the c = 1 specialization."""
    bracket = QPoly((-1 + u - u**2 + u**3 - u**4,)) + QPoly.monomial(
        u * (1 - u + u**2), n
    )
    multiplier = RatFun(
        u_minus_qn(v, n) * one_minus_u_qn(v, n)
        * (QPoly((1,)) - QPoly.q_power(n)) * bracket,
        QPoly(((1 - u) ** 2 * (u - v) * (1 - u * v),)),
    )
    return multiplier * _ff_cf(n, v, power)


def _gg_rhs(n: int, a: Fraction, t: int) -> RatFun:
    """Right side of the b = 1 specialization for t-fold sums (t = 2 or 3)."""
    one_minus_qn = RatFun(QPoly((1,)) - QPoly.q_power(n))
    pure = _pure_cf(n, 3 * t)
    param = _param_cf(n, a, t)
    inv_sq = RatFun(1, QPoly(((1 - a) ** 2,)))
    a_rf = RatFun(Fraction(a))
    bn = _bracket_n(n) ** t
    inner = a_rf * one_minus_qn**2 * inv_sq * pure - RatFun(
        one_minus_u_qn(a, n) * u_minus_qn(a, n)
    ) * inv_sq * param
    return bn * one_minus_qn**2 * pure + bn * _two_minus_qn(n) * inner


# ----------------------------------------------------------------------
# Main theorems.

def thm_a_sides(n: int) -> tuple[RatFun, RatFun, QPoly]:
    """Left side, right side and modulus of the double-sum congruence."""
    _n1mod3(n)
    lhs = simplex_sum(TermSpec.A(), 2, n - 1)
    rhs = (
        _bracket_n(n) ** 2
        * _pure_cf(n, 6)
        * (1 + 2 * _bracket_n(n) ** 2 * _two_minus_qn(n) * r_sum(n))
    )
    return lhs, rhs, cyclotomic(n) ** 6


def verify_thm_a(n: int) -> bool:
    lhs, rhs, modulus = thm_a_sides(n)
    return congruent_mod(CongruenceClaim(lhs, rhs, modulus))


def thm_aa_sides(n: int) -> tuple[RatFun, RatFun, QPoly]:
    """Left side, right side and modulus of the triple-sum congruence."""
    _n1mod3(n)
    lhs = simplex_sum(TermSpec.A(), 3, n - 1)
    rhs = (
        _bracket_n(n) ** 3
        * _pure_cf(n, 9)
        * (1 + 3 * _bracket_n(n) ** 2 * r_sum(n))
    )
    return lhs, rhs, cyclotomic(n) ** 6


def verify_thm_aa(n: int) -> bool:
    """Triple-sum congruence, plus the final bracket reduction when it is used.

    The [n]⁵(2-qⁿ) ≡ [n]⁵ reduction enters the proof only when the r-sum is
    nonempty, so it is checked for n > 1 and vacuous at n = 1.
    """
    lhs, rhs, modulus = thm_aa_sides(n)
    ok = congruent_mod(CongruenceClaim(lhs, rhs, modulus))
    if n > 1:
        ok = ok and verify_final_reduction(n)
    return ok


def verify_final_reduction(n: int) -> bool:
    """[n]⁵·(2-qⁿ) ≡ [n]⁵ modulo the sixth cyclotomic power (n > 1)."""
    _n1mod3(n)
    _require(n > 1, "the bracket reduction is vacuous at n = 1")
    bn5 = _bracket_n(n) ** 5
    return congruent_mod(
        CongruenceClaim(bn5 * _two_minus_qn(n), bn5, cyclotomic(n) ** 6)
    )


def _parametric_sides(n: int, a: Fraction, b: Fraction, t: int):
    _n1mod3(n)
    reason = pair_degeneracy_reason(a, b)
    _require(reason is None, f"degenerate parameters: {reason}")
    lhs = simplex_sum(TermSpec.B(a, b), t, n - 1)
    rhs = RatFun(0)
    for u, v in ((a, b), (b, a)):
        bracket = QPoly((-1 - v * v,)) + QPoly.monomial(v, n)
        multiplier = RatFun(
            one_minus_u_qn(u, n) * u_minus_qn(u, n) * bracket,
            QPoly(((v - u) * (1 - v * u),)),
        )
        rhs = rhs + _bracket_n(n) ** t * multiplier * _param_cf(n, u, t)
    modulus = (
        cyclotomic(n) ** 2
        * one_minus_u_qn(a, n) * u_minus_qn(a, n)
        * one_minus_u_qn(b, n) * u_minus_qn(b, n)
    )
    return lhs, rhs, modulus


def thm_c_sides(n: int, a, b):
    return _parametric_sides(n, Fraction(a), Fraction(b), 2)


def thm_d_sides(n: int, a, b):
    return _parametric_sides(n, Fraction(a), Fraction(b), 3)


def verify_thm_c(n: int, a, b) -> bool:
    lhs, rhs, modulus = thm_c_sides(n, a, b)
    return congruent_mod(CongruenceClaim(lhs, rhs, modulus))


def verify_thm_d(n: int, a, b) -> bool:
    lhs, rhs, modulus = thm_d_sides(n, a, b)
    return congruent_mod(CongruenceClaim(lhs, rhs, modulus))


# ----------------------------------------------------------------------
# The congruence chain.

def chain_sides(statement: str, n: int, point: ParamPoint):
    """(lhs, rhs, modulus) for one link of the congruence chain.

    Double-sum links use squared closed forms, triple-sum links cubes; the
    c = 1 links take (a, b) from the point and the b = 1 links only a.
    """
    _n1mod3(n)
    a, b, c = point.a, point.b, point.c
    t = 2 if statement in ("wei-bb", "wei-cc", "wei-dd", "wei-ee", "wei-ef",
                           "wei-ff", "wei-gg") else 3
    if statement in ("wei-ff", "wei-ggg"):
        lhs = simplex_sum(TermSpec.B(a, b), t, n - 1)
        rhs = _ff_half(n, a, b, t) + _ff_half(n, b, a, t)
        modulus = (
            cyclotomic(n) ** 2
            * u_minus_qn(a, n) * one_minus_u_qn(a, n)
            * u_minus_qn(b, n) * one_minus_u_qn(b, n)
        )
        return lhs, rhs, modulus
    if statement in ("wei-gg", "wei-hhh"):
        lhs = simplex_sum(TermSpec.b_star(a), t, n - 1)
        rhs = _gg_rhs(n, a, t)
        modulus = cyclotomic(n) ** 4 * one_minus_u_qn(a, n) * u_minus_qn(a, n)
        return lhs, rhs, modulus
    lhs = simplex_sum(TermSpec.beta(a, b, c), t, n - 1)
    m_a, m_b, m_c = lemma22_moduli(point, n)
    if statement in ("wei-bb", "wei-bbb"):
        return lhs, RatFun(0), cyclotomic(n)
    if statement in ("wei-cc", "wei-ccc"):
        return lhs, cf_vanishing(n, b, c) ** t, m_a
    if statement in ("wei-dd", "wei-ddd"):
        return lhs, cf_paired(n, a, c) ** t, m_b
    if statement in ("wei-ee", "wei-eee"):
        return lhs, cf_paired(n, a, b) ** t, m_c
    if statement in ("wei-ef", "wei-fff"):
        m1, m2, m3 = lemma22_fractions(point, n)
        rhs = (
            m1 * cf_vanishing(n, b, c) ** t
            + m2 * cf_paired(n, a, c) ** t
            + m3 * cf_paired(n, a, b) ** t
        )
        return lhs, rhs, cyclotomic(n) * m_a * m_b * m_c
    raise ValueError(f"unknown chain statement {statement!r}")


def verify_chain(statement: str, n: int, point: ParamPoint) -> bool:
    lhs, rhs, modulus = chain_sides(statement, n, point)
    return congruent_mod(CongruenceClaim(lhs, rhs, modulus))


def verify_crt_recombination(point: ParamPoint, n: int) -> bool:
    """Replay the Chinese-remainder step on the three chain closed forms.

    The squared closed forms are reduced modulo their reference moduli,
    recombined with poly_crt, and the reconstruction must reproduce each
    residue; independently, the multiplier combination must also match each
    closed form modulo each modulus.
    """
    from .congruence import reduce_mod  # local import avoids a cycle at import time

    _n1mod3(n)
    a, b, c = point.a, point.b, point.c
    moduli = lemma22_moduli(point, n)
    forms = (
        cf_vanishing(n, b, c) ** 2,
        cf_paired(n, a, c) ** 2,
        cf_paired(n, a, b) ** 2,
    )
    residues = [reduce_mod(f, m) for f, m in zip(forms, moduli)]
    recombined = poly_crt(residues, list(moduli))
    for res, mod in zip(residues, moduli):
        if not recombined.divrem(mod)[1] == res:
            return False
    combo = sum(
        (m * f for m, f in zip(lemma22_fractions(point, n), forms)),
        start=RatFun(0),
    )
    return all(
        congruent_mod(CongruenceClaim(combo, f, m))
        for f, m in zip(forms, moduli)
    )


# ----------------------------------------------------------------------
# Summation inputs: the vanishing sum, its lemma, and the closed-form sums.

def base_a_term(n: int, point: ParamPoint, k: int) -> RatFun:
    """The k-th summand of the terminating transformed series (it sums to 0)."""
    a, b, c = point.a, point.b, point.c
    q = QMonomial.q
    num = q_pochhammer_multi(
        (
            QMonomial(a, 1),
            QMonomial(Fraction(1) / a, 1),
            QMonomial(Fraction(1) / b, 1),
            QMonomial(Fraction(1) / c, 1),
            QMonomial(b * c, 1),
            q(1 - n),
        ),
        3,
        k,
    )
    den = q_pochhammer_multi(
        (
            QMonomial(Fraction(1) / a, 3 - n),
            QMonomial(a, 3 - n),
            QMonomial(b, 3 - n),
            QMonomial(c, 3 - n),
            QMonomial(Fraction(1) / (b * c), 3 - n),
            q(3),
        ),
        3,
        k,
    )
    return (
        q_integer_ratfun(6 * k + 1 - n)
        * num
        * RatFun.q_power((3 - 2 * n) * k)
        / den
    )


def verify_base_a(n: int, point: ParamPoint) -> bool:
    """The transformed terminating sum vanishes identically."""
    m = _n1mod3(n)
    total = RatFun(0)
    for k in range(m + 1):
        total = total + base_a_term(n, point, k)
    return total.is_zero


def verify_lemma_a(m: int, t: int, n: int, lam: Sequence) -> bool:
    """Simplex sums of a window-vanishing sequence factor into powers.

    Checks, by brute force on both sides, that the t-fold simplex sum of lam
    over k1 + ... + kt <= n - 1 equals (sum of lam up to (n-1)/m)**t.  The
    vanishing of lam on (n+m-1)/m <= k <= n-1 is this statement's hypothesis
    and is verified first; violations raise WindowHypothesisError.
    """
    _require(m >= t >= 2, "need m >= t >= 2")
    _require(n >= 1 and n % m == 1, f"n must be ≡ 1 (mod {m})")
    values = [v if isinstance(v, RatFun) else RatFun(Fraction(v)) for v in lam]
    _require(len(values) >= n, f"need at least n = {n} sequence values")
    lo = (n + m - 1) // m
    for k in range(lo, n):
        if not values[k].is_zero:
            raise WindowHypothesisError(
                f"lam({k}) must vanish on the window [{lo}, {n - 1}]"
            )
    brute = simplex_sum(values[:n], t, n - 1)
    short = RatFun(0)
    for k in range((n - 1) // m + 1):
        short = short + values[k]
    return brute == short**t


def verify_base_bc(n: int, point: ParamPoint, which: str) -> bool:
    """The two exact specializations of the parametrized sum, per closed form.

    which='B': a = q**n and a = q**(-n) against the (b, c) closed form.
    which='C': b = q**n and b = q**(-n)/c against the (a, c) closed form.
    """
    m = _n1mod3(n)
    a, b, c = point.a, point.b, point.c
    if which == "B":
        closed = cf_vanishing(n, b, c)
        cases = [
            TermSpec.beta(QMonomial.q(n), b, c),
            TermSpec.beta(QMonomial.q(-n), b, c),
        ]
    elif which == "C":
        closed = cf_paired(n, a, c)
        cases = [
            TermSpec.beta(a, QMonomial.q(n), c),
            TermSpec.beta(a, QMonomial(Fraction(1) / c, -n), c),
        ]
    else:
        raise ValueError("which must be 'B' or 'C'")
    for spec in cases:
        total = RatFun(0)
        for k in range(m + 1):
            total = total + term(spec, k)
        if total != closed:
            return False
    return True


def verify_jackson(n_terms: int, a, b, c, d, e) -> bool:
    """Terminating very-well-poised balanced sum against its product form.

    Parameters are monomials in q; the balance a²·q = bcde·q**(-n) must hold
    exactly.  Checks the (n_terms+1)-term sum equals
    (aq, aq/bc, aq/bd, aq/cd;q)_n / (aq/b, aq/c, aq/d, aq/bcd;q)_n.
    """
    _require(n_terms >= 0, "n_terms must be nonnegative")
    a, b, c, d, e = (QMonomial.of(x) for x in (a, b, c, d, e))
    lhs_bal = a * a * QMonomial.q(1)
    rhs_bal = b * c * d * e * QMonomial.q(-n_terms)
    if lhs_bal != rhs_bal:
        raise ValueError(
            f"unbalanced parameters: a²q = {lhs_bal} but bcde·q^-n = {rhs_bal}"
        )
    q = QMonomial.q
    one = RatFun(1)
    a_rf = a.as_ratfun()
    if (one - a_rf).is_zero:
        raise ValueError("denominator vanishes: a = 1")
    total = RatFun(0)
    for k in range(n_terms + 1):
        num = q_pochhammer_multi((a, b, c, d, e, q(-n_terms)), 1, k)
        den = q_pochhammer_multi(
            (
                q(1),
                a * q(1) / b,
                a * q(1) / c,
                a * q(1) / d,
                a * q(1) / e,
                a * q(n_terms + 1),
            ),
            1,
            k,
        )
        if den.is_zero:
            raise ValueError(f"denominator vanishes in term {k}")
        well_poised = (one - a.shifted(2 * k).as_ratfun()) / (one - a_rf)
        total = total + well_poised * num * RatFun.q_power(k) / den
    cf_num = q_pochhammer_multi(
        (a * q(1), a * q(1) / (b * c), a * q(1) / (b * d), a * q(1) / (c * d)),
        1,
        n_terms,
    )
    cf_den = q_pochhammer_multi(
        (a * q(1) / b, a * q(1) / c, a * q(1) / d, a * q(1) / (b * c * d)),
        1,
        n_terms,
    )
    if cf_den.is_zero:
        raise ValueError("denominator vanishes in the closed form")
    return total == cf_num / cf_den


# ----------------------------------------------------------------------
# The a → 1 limits, via order-2 jets in ε = a - 1.

def limit_sides(dim: int, n: int) -> tuple[RatFun, RatFun]:
    """(jet-extracted limit, displayed closed form) for the a → 1 limit.

    dim = 2 uses fourth/second powers, dim = 3 sixth/third, matching the
    double- and triple-sum proofs.  The bracketed expression is multiplied by
    (1-a)² = ε² first; extraction then demands the ε⁰ and ε¹ parts vanish.
    """
    _require(dim in (2, 3), "dim must be 2 or 3")
    m = _n1mod3(n)
    pure = _pure_cf(n, 2 * dim)
    a_jet = EpsJet.one_plus_eps()
    inv_a = 1 / a_jet
    factor = EpsJet.constant(1)
    for i in range(m):
        r2 = RatFun.q_power(2 + 3 * i)
        r3 = RatFun.q_power(3 + 3 * i)
        factor = factor * (1 - a_jet * r2) * (1 - inv_a * r2)
        factor = factor / ((1 - inv_a * r3) * (1 - a_jet * r3))
    param = factor**dim
    e = _qn(n)
    one_minus_qn = 1 - e
    jet = (
        a_jet * one_minus_qn**2 * pure
        - (1 - a_jet * e) * (a_jet - e) * param
    )
    extracted = jet.extract_limit(2)
    closed = pure * (e + dim * _bracket_n(n) ** 2 * r_sum(n))
    return extracted, closed


def verify_limit(dim: int, n: int) -> bool:
    extracted, closed = limit_sides(dim, n)
    return extracted == closed


# ----------------------------------------------------------------------
# Earlier one- and two-dimensional results.

def bachraoui_term(k: int) -> RatFun:
    """[8k+1]·(q;q²)_k²·(q;q²)_{2k}·q^(2k²) / ((q²;q²)_{2k}·(q⁶;q⁶)_k²)."""
    q = QMonomial.q
    return (
        RatFun(q_integer(8 * k + 1))
        * q_pochhammer(q(1), 2, k) ** 2
        * q_pochhammer(q(1), 2, 2 * k)
        * RatFun.q_power(2 * k * k)
        / (q_pochhammer(q(2), 2, 2 * k) * q_pochhammer(q(6), 6, k) ** 2)
    )


def prior_sides(statement: str, n: int, m_bound: int | None = None):
    """(lhs, rhs, modulus) for the previously known congruences."""
    spec_a = TermSpec.A()
    if statement == "vanhamme-q-partial":
        _require(n % 3 != 0, "n must not be divisible by 3")
        lhs = simplex_sum(spec_a, 1, n - 1)
        modulus = QPoly((1,)) * q_integer(n)
        if n % 3 == 2:
            modulus = modulus * cyclotomic(n)
        return lhs, RatFun(0), modulus
    if statement == "wei-a":
        m = _n1mod3(n)
        lhs = simplex_sum(spec_a, 1, m)
        rhs = (
            _bracket_n(n)
            * _pure_cf(n, 3)
            * (1 + _bracket_n(n) ** 2 * _two_minus_qn(n) * r_sum(n))
        )
        return lhs, rhs, q_integer(n) * cyclotomic(n) ** 4
    if statement == "wei-b":
        _require(n % 3 == 2, f"n must be ≡ 2 (mod 3), got {n}")
        _require(m_bound is not None, "wei-b needs an explicit truncation bound")
        rho = (2 * n - 1) // 3
        lhs = simplex_sum(spec_a, 1, m_bound)
        q = QMonomial.q
        rhs = (
            RatFun(5 * q_integer(2 * n))
            * (q_pochhammer(q(2), 3, rho) / q_pochhammer(q(3), 3, rho)) ** 3
        )
        return lhs, rhs, q_integer(n) * cyclotomic(n) ** 5
    if statement == "bachraoui-double":
        import math

        _require(math.gcd(n, 6) == 1, "n must be coprime to 6")
        lhs = simplex_sum(bachraoui_term, 2, n - 1)
        rhs = RatFun.q_power(1) * _bracket_n(n) ** 2
        return lhs, rhs, q_integer(n) * cyclotomic(n) ** 2
    raise ValueError(f"unknown prior statement {statement!r}")


def verify_prior(statement: str, n: int, m_bound: int | None = None) -> bool:
    lhs, rhs, modulus = prior_sides(statement, n, m_bound)
    return congruent_mod(CongruenceClaim(lhs, rhs, modulus))

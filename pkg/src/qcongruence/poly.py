"""Dense univariate polynomials in q over exact rationals.

A QPoly stores an integer coefficient vector together with a single positive
integer denominator, so coefficient i is ``ints[i] / den``.  The vector
carries no trailing zeros and shares no common factor with the denominator;
the zero polynomial is the empty vector.  This keeps the heavy arithmetic in
integer land (see _intpoly) while the public surface speaks Fraction.

Also here: polynomial gcd / extended gcd, cyclotomic polynomials, and the
Chinese remainder theorem for pairwise coprime moduli.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from . import _intpoly


class CoprimalityError(ValueError):
    """Raised when a CRT reconstruction is attempted with non-coprime moduli."""


def _coeff_parts(c):
    # ints, Fractions and mpq all expose numerator/denominator
    return int(c.numerator), int(c.denominator)


class QPoly:
    """Dense polynomial in q with exact rational coefficients."""

    __slots__ = ("_ints", "_den")

    def __init__(self, coeffs=()):
        nums = []
        dens = []
        for c in coeffs:
            if isinstance(c, int):
                nums.append(c)
                dens.append(1)
            else:
                n, d = _coeff_parts(c)
                nums.append(n)
                dens.append(d)
        den = 1
        for d in dens:
            den = den * d // math.gcd(den, d)
        ints = [n * (den // d) for n, d in zip(nums, dens)]
        normalized = _normalize(ints, den)
        self._ints = normalized[0]
        self._den = normalized[1]

    @classmethod
    def _raw(cls, ints: tuple[int, ...], den: int) -> "QPoly":
        """Wrap an already-normalized (ints, den) pair without copying."""
        poly = object.__new__(cls)
        poly._ints = ints
        poly._den = den
        return poly

    @classmethod
    def _make(cls, ints, den: int) -> "QPoly":
        ints, den = _normalize(list(ints), den)
        return cls._raw(ints, den)

    @classmethod
    def monomial(cls, coeff, power: int) -> "QPoly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        n, d = _coeff_parts(coeff) if not isinstance(coeff, int) else (coeff, 1)
        if n == 0:
            return ZERO
        return cls._make((0,) * power + (n,), d)

    @classmethod
    def q_power(cls, power: int) -> "QPoly":
        return cls.monomial(1, power)

    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._ints) - 1

    @property
    def is_zero(self) -> bool:
        return not self._ints

    @property
    def is_one(self) -> bool:
        return self._ints == (1,) and self._den == 1

    def coefficient(self, i: int) -> Fraction:
        if i < 0 or i >= len(self._ints):
            return Fraction(0)
        return Fraction(self._ints[i], self._den)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._ints)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._ints:
            return Fraction(0)
        return Fraction(self._ints[-1], self._den)

    @property
    def is_monic(self) -> bool:
        return bool(self._ints) and self._ints[-1] == self._den

    def has_integer_coefficients(self) -> bool:
        return self._den == 1

    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        d1, d2 = self._den, other._den
        den = d1 * d2 // math.gcd(d1, d2)
        m1, m2 = den // d1, den // d2
        a, b = self._ints, other._ints
        if len(a) < len(b):
            a, b, m1, m2 = b, a, m2, m1
        out = [c * m1 for c in a]
        for i, c in enumerate(b):
            out[i] += c * m2
        return QPoly._make(out, den)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self._ints), self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        return QPoly._make(
            _intpoly.mul(self._ints, other._ints), self._den * other._den
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def divrem(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Quotient and remainder with deg(remainder) < deg(other)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or self.degree < other.degree:
            return ZERO, self
        rem = [mpq(c, self._den) for c in self._ints]
        div = [mpq(c, other._den) for c in other._ints]
        dd = len(div) - 1
        lead = div[-1]
        quot = [mpq(0)] * (len(rem) - dd)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + dd] / lead
            if c:
                quot[i] = c
                for j in range(dd):
                    rem[i + j] -= c * div[j]
        return QPoly(quot), QPoly(rem[:dd])

    def __divmod__(self, other):
        return self.divrem(other)

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Quotient when ``other`` divides ``self`` exactly; raises otherwise.

        Divisibility over the rationals is decided on primitive parts (Gauss),
        so integers shared between contents and denominators never get in the
        way.
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return ZERO
        s_cont = _intpoly.content(self._ints)
        o_cont = _intpoly.content(other._ints)
        s_pp = tuple(c // s_cont for c in self._ints)
        o_pp = tuple(c // o_cont for c in other._ints)
        quot = _intpoly.exact_div(s_pp, o_pp)
        return QPoly._make(
            [c * s_cont * other._den for c in quot], o_cont * self._den
        )

    def monic(self) -> "QPoly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        if self.is_monic:
            return self
        return self * (1 / self.leading_coefficient)

    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point."""
        acc = mpq(0)
        xq = mpq(*_coeff_parts(x)) if not isinstance(x, int) else mpq(x)
        for c in reversed(self._ints):
            acc = acc * xq + c
        acc = acc / self._den
        return Fraction(int(acc.numerator), int(acc.denominator))

    def shift(self, power: int) -> "QPoly":
        """Multiply by q**power (power >= 0)."""
        if power < 0:
            raise ValueError("shift by negative power")
        if self.is_zero or power == 0:
            return self
        return QPoly._raw((0,) * power + self._ints, self._den)

    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._ints == other._ints and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._ints, self._den))

    def __bool__(self):
        return bool(self._ints)

    def __repr__(self):
        return f"QPoly({self!s})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self._ints):
            if not c:
                continue
            coeff = Fraction(c, self._den)
            if i == 0:
                parts.append(str(coeff))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                if coeff == 1:
                    parts.append(mono)
                elif coeff == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _normalize(ints: list[int], den: int) -> tuple[tuple[int, ...], int]:
    n = len(ints)
    while n and ints[n - 1] == 0:
        n -= 1
    if n == 0:
        return (), 1
    del ints[n:]
    if den < 0:
        den = -den
        ints = [-c for c in ints]
    if den != 1:
        g = den
        for c in ints:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            ints = [c // g for c in ints]
    return tuple(ints), den


def _coerce(value) -> "QPoly":
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly._make((value,), 1) if value else ZERO
    if isinstance(value, Fraction) or type(value) is mpq:
        n, d = _coeff_parts(value)
        return QPoly._make((n,), d) if n else ZERO
    return NotImplemented


ZERO = QPoly._raw((), 1)
ONE = QPoly._raw((1,), 1)
Q = QPoly._raw((0, 1), 1)


def poly_gcd(p: QPoly, r: QPoly) -> QPoly:
    """Monic greatest common divisor; inputs must not both be zero."""
    if p.is_zero and r.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    g = _intpoly.gcd(p._ints, r._ints)
    return QPoly._make(g, 1).monic()


def poly_xgcd(p: QPoly, r: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Extended gcd: returns (g, s, t) with s*p + t*r = g, g monic."""
    if p.is_zero and r.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = p, r
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero:
        quot, rem = r0.divrem(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    scale = 1 / r0.leading_coefficient
    return r0 * scale, s0 * scale, t0 * scale


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    """The n-th cyclotomic polynomial, by recursive division of q**n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return QPoly((-1, 1))
    numerator = QPoly.q_power(n) - 1
    for d in range(1, n):
        if n % d == 0:
            numerator = numerator.exact_div(cyclotomic(d))
    return numerator


def poly_crt(residues, moduli) -> QPoly:
    """Reconstruct the unique R with R ≡ residues[i] (mod moduli[i]).

    The moduli must be pairwise coprime (checked); deg(R) < deg(prod moduli).
    """
    residues = list(residues)
    moduli = list(moduli)
    if len(residues) != len(moduli) or not moduli:
        raise ValueError("need equally many residues and moduli, at least one")
    for m in moduli:
        if m.is_zero:
            raise ZeroDivisionError("zero modulus in CRT")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if poly_gcd(moduli[i], moduli[j]).degree != 0:
                raise CoprimalityError(
                    f"moduli {i} and {j} share a nonconstant factor"
                )
    acc_res = residues[0].divrem(moduli[0])[1]
    acc_mod = moduli[0]
    for res, mod in zip(residues[1:], moduli[1:]):
        g, s, _t = poly_xgcd(acc_mod, mod)
        # s*acc_mod ≡ 1 (mod mod) once g is the constant 1
        assert g.degree == 0
        combined_mod = acc_mod * mod
        delta = (res - acc_res) * s % mod
        acc_res = (acc_res + acc_mod * delta) % combined_mod
        acc_mod = combined_mod
    return acc_res

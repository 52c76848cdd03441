"""Reduced rational functions of q.

A RatFun is a fraction of two QPoly in lowest terms with a monic denominator,
so representations are canonical and equality is structural.  Every operation
reduces eagerly; products cross-cancel before multiplying so intermediate
degrees stay as small as the data allows.
"""

from __future__ import annotations

from fractions import Fraction

from . import _intpoly
from .poly import ONE, ZERO, QPoly


class RatFun:
    """Quotient num/den of dense rational polynomials, always in lowest terms."""

    __slots__ = ("_num", "_den")

    def __init__(self, num=ONE, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        reduced = _reduce(num, den)
        self._num = reduced[0]
        self._den = reduced[1]

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "RatFun":
        """Wrap an already reduced, monic-denominator pair."""
        f = object.__new__(cls)
        f._num = num
        f._den = den
        return f

    @classmethod
    def q_power(cls, power: int) -> "RatFun":
        """q**power for any integer power; negative powers live in the denominator."""
        if power >= 0:
            return cls._raw(QPoly.q_power(power), ONE)
        return cls._raw(ONE, QPoly.q_power(-power))

    # ------------------------------------------------------------------
    @property
    def num(self) -> QPoly:
        return self._num

    @property
    def den(self) -> QPoly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self._den.is_one

    def as_poly(self) -> QPoly:
        if not self._den.is_one:
            raise ValueError(f"{self!r} is not a polynomial")
        return self._num

    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self._den == other._den:
            return RatFun._raw(*_reduce(self._num + other._num, self._den))
        g = _poly_gcd_raw(self._den, other._den)
        if g.degree <= 0:
            num = self._num * other._den + other._num * self._den
            den = self._den * other._den
            # coprime reduced inputs: the sum is already in lowest terms
            return RatFun._raw(num, den)
        solo = other._den.exact_div(g)
        num = self._num * solo + other._num * self._den.exact_div(g)
        den = self._den * solo
        return RatFun._raw(*_reduce(num, den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self._num, self._den)

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
            return RF_ZERO
        a, b = _cross_cancel(self._num, other._den)
        c, d = _cross_cancel(other._num, self._den)
        return RatFun._raw(*_monicize(a * c, d * b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        # powers of a reduced fraction stay reduced and monic
        return RatFun._raw(self._num**exponent, self._den**exponent)

    def reciprocal(self) -> "RatFun":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RatFun._raw(*_monicize(self._den, self._num))

    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point where the denominator is nonzero."""
        dv = self._den.evaluate(x)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return self._num.evaluate(x) / dv

    # ------------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"RatFun({self._num!s}, {self._den!s})"

    def __str__(self):
        if self._den.is_one:
            return str(self._num)
        return f"({self._num!s}) / ({self._den!s})"


def _as_poly(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly((value,))
    if isinstance(value, Fraction):
        return QPoly((value,))
    raise TypeError(f"cannot build a RatFun from {type(value).__name__}")


def _coerce(value):
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (QPoly, int, Fraction)):
        return RatFun(_as_poly(value))
    return NotImplemented


def _poly_gcd_raw(p: QPoly, r: QPoly) -> QPoly:
    g = _intpoly.gcd(p._ints, r._ints)
    return QPoly._make(g, 1)


def _monicize(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return ZERO, ONE
    lead = den.leading_coefficient
    if lead != 1:
        scale = 1 / lead
        num = num * scale
        den = den * scale
    return num, den


def _reduce(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return ZERO, ONE
    if den.degree == 0:
        return num * (1 / den.leading_coefficient), ONE
    g = _poly_gcd_raw(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    return _monicize(num, den)


def _cross_cancel(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    """Cancel common factors between a numerator and an unrelated denominator."""
    if num.is_zero or den.degree == 0:
        return num, den
    g = _poly_gcd_raw(num, den)
    if g.degree > 0:
        return num.exact_div(g), den.exact_div(g)
    return num, den


RF_ZERO = RatFun._raw(ZERO, ONE)
RF_ONE = RatFun._raw(ONE, ONE)

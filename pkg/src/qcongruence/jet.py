"""Order-2 truncated power series in ε with rational-function coefficients.

An EpsJet represents c0 + c1·ε + c2·ε² + O(ε³).  Substituting a = 1 + ε turns
a parametrized rational function of (a, q) into a jet whose coefficients are
exact rational functions of q, which is how the a → 1 limits with a double
pole in (1 - a) are evaluated: pre-multiply by (1 - a)² = ε², check that the
ε⁰ and ε¹ parts vanish, and read the limit off the ε² coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import QPoly
from .ratfun import RF_ONE, RF_ZERO, RatFun


class JetLimitError(ValueError):
    """The jet does not represent ε² times a finite limit."""


def _rf(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (QPoly, int, Fraction)):
        return RatFun(value) if not isinstance(value, RatFun) else value
    raise TypeError(f"cannot use {type(value).__name__} as a jet coefficient")


@dataclass(frozen=True)
class EpsJet:
    """Truncated series c0 + c1 ε + c2 ε², exact in every coefficient."""

    c0: RatFun
    c1: RatFun
    c2: RatFun

    def __post_init__(self):
        object.__setattr__(self, "c0", _rf(self.c0))
        object.__setattr__(self, "c1", _rf(self.c1))
        object.__setattr__(self, "c2", _rf(self.c2))

    @classmethod
    def constant(cls, value) -> "EpsJet":
        return cls(_rf(value), RF_ZERO, RF_ZERO)

    @classmethod
    def one_plus_eps(cls) -> "EpsJet":
        """The jet of a = 1 + ε."""
        return cls(RF_ONE, RF_ONE, RF_ZERO)

    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsJet(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    __radd__ = __add__

    def __neg__(self):
        return EpsJet(-self.c0, -self.c1, -self.c2)

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
        return EpsJet(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
            self.c0 * other.c2 + self.c1 * other.c1 + self.c2 * other.c0,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.c0.is_zero:
            raise ZeroDivisionError("jet division needs a unit constant term")
        z0 = self.c0 / other.c0
        z1 = (self.c1 - z0 * other.c1) / other.c0
        z2 = (self.c2 - z0 * other.c2 - z1 * other.c1) / other.c0
        return EpsJet(z0, z1, z2)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (EpsJet.constant(1) / self) ** (-exponent)
        result = EpsJet.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    def __str__(self):
        return f"({self.c0}) + ({self.c1})·ε + ({self.c2})·ε²"

    def extract_limit(self, pole_order: int) -> RatFun:
        """The limit carried by this jet.

        pole_order 0 reads the constant coefficient.  pole_order 2 assumes the
        jet is ε² times the limit (the expression was pre-multiplied by
        (1 - a)²) and demands that the ε⁰ and ε¹ coefficients vanish exactly.
        """
        if pole_order == 0:
            return self.c0
        if pole_order == 2:
            if not self.c0.is_zero or not self.c1.is_zero:
                raise JetLimitError(
                    "no finite limit: expected 0 + 0·ε, got "
                    f"({self.c0}) + ({self.c1})·ε"
                )
            return self.c2
        raise ValueError("pole_order must be 0 or 2")


def _coerce(value):
    if isinstance(value, EpsJet):
        return value
    if isinstance(value, (RatFun, QPoly, int, Fraction)):
        return EpsJet.constant(value)
    return NotImplemented

"""q-combinatorial building blocks.

q-integers, finite q-shifted factorials over monomial arguments, the term
sequences of the verified double- and triple-sum congruences, and brute-force
sums over integer simplices.  Simplex sums are deliberately naive: they are
the oracle side of every congruence check and never use the product
factorization that the theorems themselves rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .poly import QPoly
from .ratfun import RF_ONE, RatFun


@dataclass(frozen=True)
class QMonomial:
    """scale · q**power with an exact rational scale and integer power."""

    scale: Fraction
    power: int = 0

    def __post_init__(self):
        if not isinstance(self.scale, Fraction):
            object.__setattr__(self, "scale", Fraction(self.scale))

    @classmethod
    def q(cls, power: int = 1) -> "QMonomial":
        return cls(Fraction(1), power)

    @classmethod
    def of(cls, value) -> "QMonomial":
        if isinstance(value, QMonomial):
            return value
        return cls(Fraction(value), 0)

    @property
    def is_zero(self) -> bool:
        return self.scale == 0

    def __mul__(self, other):
        other = QMonomial.of(other)
        return QMonomial(self.scale * other.scale, self.power + other.power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QMonomial.of(other)
        if other.scale == 0:
            raise ZeroDivisionError("division by the zero monomial")
        return QMonomial(self.scale / other.scale, self.power - other.power)

    def __rtruediv__(self, other):
        return QMonomial.of(other) / self

    def shifted(self, dpower: int) -> "QMonomial":
        """Multiply by q**dpower."""
        return QMonomial(self.scale, self.power + dpower)

    def as_ratfun(self) -> RatFun:
        return RatFun.q_power(self.power) * self.scale


def q_integer(s: int) -> QPoly:
    """[s] = 1 + q + ... + q**(s-1) for s >= 1."""
    if s < 1:
        raise ValueError("q_integer needs s >= 1")
    return QPoly((1,) * s)


def q_integer_ratfun(s: int) -> RatFun:
    """[s] = (1 - q**s)/(1 - q) for any integer s; negative s gives -[−s]/q**(−s)."""
    if s > 0:
        return RatFun(q_integer(s))
    if s == 0:
        return RatFun(0)
    return RatFun(-q_integer(-s), QPoly.q_power(-s))


def q_pochhammer(x, step: int, count: int) -> RatFun:
    """Finite q-shifted factorial: product of (1 - scale·q^(power + step·k)).

    ``x`` is a QMonomial (rationals are lifted).  Negative q-powers in the
    argument produce a denominator that is a pure power of q.
    """
    if step < 1:
        raise ValueError("q_pochhammer needs step >= 1")
    if count < 0:
        raise ValueError("q_pochhammer needs count >= 0")
    x = QMonomial.of(x)
    num = QPoly((1,))
    den_power = 0
    for k in range(count):
        e = x.power + step * k
        if e >= 0:
            num = num * (QPoly((1,)) - QPoly.monomial(x.scale, e))
        else:
            num = num * (QPoly.q_power(-e) - QPoly((x.scale,)))
            den_power += -e
    return RatFun(num, QPoly.q_power(den_power))


def q_pochhammer_multi(args: Sequence, step: int, count: int) -> RatFun:
    """Product of q_pochhammer over several arguments (compact-notation helper)."""
    out = RF_ONE
    for x in args:
        out = out * q_pochhammer(x, step, count)
    return out


@dataclass(frozen=True)
class TermSpec:
    """Which term sequence to generate, and at which parameter values.

    Parameters are QMonomials so that exact substitutions like a = q**n or
    b = q**(-n)/c are ordinary inputs rather than limits.
    """

    kind: str
    a: QMonomial | None = None
    b: QMonomial | None = None
    c: QMonomial | None = None

    _REQUIRED = {"A": (), "Bstar": ("a",), "B": ("a", "b"), "beta": ("a", "b", "c")}

    def __post_init__(self):
        if self.kind not in self._REQUIRED:
            raise ValueError(f"unknown term kind {self.kind!r}")
        required = self._REQUIRED[self.kind]
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if name in required:
                if value is None:
                    raise ValueError(f"kind {self.kind!r} needs parameter {name}")
                value = QMonomial.of(value)
                if value.is_zero:
                    raise ValueError(f"parameter {name} must be nonzero")
                object.__setattr__(self, name, value)
            elif value is not None:
                raise ValueError(f"kind {self.kind!r} takes no parameter {name}")

    @classmethod
    def A(cls) -> "TermSpec":
        return cls("A")

    @classmethod
    def B(cls, a, b) -> "TermSpec":
        return cls("B", a=QMonomial.of(a), b=QMonomial.of(b))

    @classmethod
    def beta(cls, a, b, c) -> "TermSpec":
        return cls("beta", a=QMonomial.of(a), b=QMonomial.of(b), c=QMonomial.of(c))

    @classmethod
    def b_star(cls, a) -> "TermSpec":
        return cls("Bstar", a=QMonomial.of(a))


@lru_cache(maxsize=None)
def term(spec: TermSpec, k: int) -> RatFun:
    """The k-th term of the requested sequence, as a reduced rational function."""
    if k < 0:
        raise ValueError("term index must be nonnegative")
    q = QMonomial.q
    bracket = RatFun(q_integer(6 * k + 1))
    qk3 = RatFun.q_power(3 * k)
    if spec.kind == "A":
        num = q_pochhammer(q(1), 3, k) ** 6
        den = q_pochhammer(q(3), 3, k) ** 6
        return bracket * num * qk3 / den
    a = spec.a
    if spec.kind == "Bstar":
        num = q_pochhammer_multi((a * q(1), q(1) / a), 3, k) * q_pochhammer(q(1), 3, k) ** 4
        den = q_pochhammer_multi((q(3) / a, a * q(3)), 3, k) * q_pochhammer(q(3), 3, k) ** 4
        return bracket * num * qk3 / den
    b = spec.b
    if spec.kind == "B":
        num = (
            q_pochhammer_multi((a * q(1), q(1) / a, b * q(1), q(1) / b), 3, k)
            * q_pochhammer(q(1), 3, k) ** 2
        )
        den = (
            q_pochhammer_multi((q(3) / a, a * q(3), q(3) / b, b * q(3)), 3, k)
            * q_pochhammer(q(3), 3, k) ** 2
        )
        return bracket * num * qk3 / den
    c = spec.c
    num = q_pochhammer_multi(
        (a * q(1), q(1) / a, q(1) / b, q(1) / c, b * c * q(1), q(1)), 3, k
    )
    den = q_pochhammer_multi(
        (q(3) / a, a * q(3), b * q(3), c * q(3), q(3) / (b * c), q(3)), 3, k
    )
    return bracket * num * qk3 / den


def _term_fn(source, weight) -> Callable[[int], RatFun]:
    if isinstance(source, TermSpec):
        base = lambda k: term(source, k)
    elif callable(source):
        base = source
    else:
        values = [v if isinstance(v, RatFun) else RatFun(QPoly((Fraction(v),))) for v in source]

        def base(k, _values=values):
            # explicit sequences are implicitly zero beyond their last entry
            return _values[k] if k < len(_values) else RatFun(0)

    if weight is None:
        return base
    return lambda k: weight(k, base(k))


def simplex_sum(source, t: int, bound: int, weight=None) -> RatFun:
    """Sum of term(k1)···term(kt) over all t-tuples with k1 + ... + kt <= bound.

    ``source`` is a TermSpec, a callable k -> RatFun, or an explicit sequence
    of values.  The sum is evaluated tuple by tuple (grouped recursively); no
    closed form is ever consulted.
    """
    if t < 1:
        raise ValueError("simplex dimension must be >= 1")
    if bound < 0:
        raise ValueError("simplex bound must be >= 0")
    fn = _term_fn(source, weight)
    values = [fn(k) for k in range(bound + 1)]
    partial: dict[tuple[int, int], RatFun] = {}

    def layer(dim: int, limit: int) -> RatFun:
        if dim == 0:
            return RF_ONE
        key = (dim, limit)
        hit = partial.get(key)
        if hit is None:
            hit = RatFun(0)
            for k in range(limit + 1):
                hit = hit + values[k] * layer(dim - 1, limit - k)
            partial[key] = hit
        return hit

    return layer(t, bound)

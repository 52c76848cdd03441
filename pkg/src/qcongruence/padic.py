"""Exact arithmetic mod p**N and the q → 1 corollaries.

Residues carry their prime and precision explicitly; mixing precisions is a
type error, and division demands a unit divisor.  The p-adic Gamma value at a
rational argument is computed from the factorial-like product over an integer
representative, a product of fewer than p**N factors, done in chunked
pairwise fashion so the heavy cases stay fast.

The corollary verifiers compute every truncated sum in exact rational
arithmetic first and reduce once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from gmpy2 import mpq

_CHUNK = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrecisionMismatchError(TypeError):
    """Arithmetic between residues at different primes or precisions."""


class NonUnitError(ZeroDivisionError):
    """Division by a residue divisible by p."""


@dataclass(frozen=True)
class PadicNum:
    """Residue in [0, p**precision) with its prime and precision attached."""

    p: int
    precision: int
    value: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        object.__setattr__(self, "value", self.value % self.p**self.precision)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    @property
    def is_unit(self) -> bool:
        return self.value % self.p != 0

    @classmethod
    def from_int(cls, value: int, p: int, precision: int) -> "PadicNum":
        return cls(p, precision, value)

    def _match(self, other: "PadicNum") -> None:
        if self.p != other.p or self.precision != other.precision:
            raise PrecisionMismatchError(
                f"cannot mix residues mod {self.p}**{self.precision} "
                f"and {other.p}**{other.precision}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        self._match(other)
        return PadicNum(self.p, self.precision, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return PadicNum(self.p, self.precision, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        self._match(other)
        return PadicNum(self.p, self.precision, self.value - other.value)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._match(other)
        return PadicNum(self.p, self.precision, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PadicNum(
            self.p, self.precision, pow(self.value, exponent, self.modulus)
        )

    def inverse(self) -> "PadicNum":
        if not self.is_unit:
            raise NonUnitError(f"{self.value} is not a unit mod {self.p}")
        return PadicNum(
            self.p, self.precision, pow(self.value, -1, self.modulus)
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        self._match(other)
        return self * other.inverse()

    def _coerce(self, other):
        if isinstance(other, PadicNum):
            return other
        if isinstance(other, int):
            return PadicNum(self.p, self.precision, other)
        raise TypeError(f"cannot combine PadicNum with {type(other).__name__}")

    def __repr__(self):
        return f"PadicNum({self.value} mod {self.p}^{self.precision})"


@dataclass(frozen=True)
class RationalResidue:
    """An exact rational viewed at precision p**precision."""

    r: Fraction
    p: int
    precision: int

    def __post_init__(self):
        if not isinstance(self.r, Fraction):
            object.__setattr__(self, "r", Fraction(self.r))


def to_padic(residue: RationalResidue) -> PadicNum:
    """numerator · denominator⁻¹ mod p**precision; the denominator must be a unit."""
    mod = residue.p**residue.precision
    den = residue.r.denominator
    if den % residue.p == 0:
        raise NonUnitError(
            f"denominator {den} is divisible by p = {residue.p}"
        )
    value = residue.r.numerator * pow(den, -1, mod) % mod
    return PadicNum(residue.p, residue.precision, value)


def _rat_to_padic(r: Fraction, p: int, precision: int) -> PadicNum:
    return to_padic(RationalResidue(r, p, precision))


def pochhammer_rat(x, k: int) -> Fraction:
    """Rising factorial x(x+1)···(x+k-1) as an exact rational."""
    if k < 0:
        raise ValueError("pochhammer_rat needs k >= 0")
    acc = mpq(1)
    xq = mpq(Fraction(x))
    for i in range(k):
        acc *= xq + i
    return Fraction(int(acc.numerator), int(acc.denominator))


def harmonic2(m: int) -> Fraction:
    """Second-order harmonic number: sum of 1/r² for r = 1..m."""
    if m < 0:
        raise ValueError("harmonic2 needs m >= 0")
    acc = mpq(0)
    for r in range(1, m + 1):
        acc += mpq(1, r * r)
    return Fraction(int(acc.numerator), int(acc.denominator))


def _range_product_mod(stop: int, p: int, mod: int) -> int:
    """Product of 1 <= j < stop with p not dividing j, mod ``mod``."""
    if mod >= 1 << 31:
        acc = 1
        for j in range(1, stop):
            if j % p:
                acc = acc * j % mod
        return acc
    acc = 1
    for start in range(1, stop, _CHUNK):
        arr = np.arange(start, min(start + _CHUNK, stop), dtype=np.int64)
        arr = arr[arr % p != 0] % mod
        while arr.size > 1:
            if arr.size & 1:
                acc = acc * int(arr[-1]) % mod
                arr = arr[:-1]
            arr = arr[0::2] * arr[1::2] % mod
        if arr.size:
            acc = acc * int(arr[0]) % mod
    return acc


def gamma_cost(p: int, precision: int) -> int:
    """Number of factors in the p-adic Gamma product at this precision."""
    return p**precision


def morita_gamma(p: int, x, precision: int) -> PadicNum:
    """p-adic Gamma at a rational argument, via the continuity lift.

    Picks the integer m ≡ x (mod p**precision) with 0 <= m < p**precision and
    returns (-1)**m times the product of the non-multiples of p below m.
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonUnitError(f"argument {x} is not a p-adic integer for p = {p}")
    mod = p**precision
    m = x.numerator * pow(x.denominator, -1, mod) % mod
    product = _range_product_mod(m, p, mod)
    if m % 2:
        product = -product % mod
    return PadicNum(p, precision, product)


# ----------------------------------------------------------------------
# Corollary and classical-supercongruence verifiers.

def _central_term(k: int) -> Fraction:
    """(6k+1) · ((1/3)_k / (1)_k)**6."""
    ratio = pochhammer_rat(Fraction(1, 3), k) / pochhammer_rat(1, k)
    return (6 * k + 1) * ratio**6


def _rational_r_sum(m: int) -> Fraction:
    return sum(
        (Fraction(1, (3 * r - 1) ** 2) - Fraction(1, (3 * r) ** 2))
        for r in range(1, m + 1)
    )


def verify_harmonic_identity(p: int) -> bool:
    """The r-sum collapses to -(1/3)·H²_{(p-1)/3} modulo p."""
    if p % 6 != 1 or not is_prime(p):
        raise ValueError("p must be a prime ≡ 1 (mod 6)")
    m = (p - 1) // 3
    lhs = _rational_r_sum(m)
    rhs = Fraction(-1, 3) * harmonic2(m)
    return _rat_to_padic(lhs, p, 1) == _rat_to_padic(rhs, p, 1)


def verify_cor(which: str, p: int) -> bool:
    """Double (cor-a) or triple (cor-aa) central simplex sum modulo p⁶.

    Everything is summed exactly over the rationals before a single reduction
    at precision 6.
    """
    if p % 6 != 1 or not is_prime(p) or p < 7:
        raise ValueError("p must be a prime ≡ 1 (mod 6), at least 7")
    m = (p - 1) // 3
    terms = [_central_term(k) for k in range(p)]
    prefix = [Fraction(0)] * (p + 1)
    for k in range(p):
        prefix[k + 1] = prefix[k] + terms[k]
    if which == "cor-a":
        lhs = sum(terms[i] * prefix[p - i] for i in range(p))
        factor = (pochhammer_rat(Fraction(2, 3), m) / pochhammer_rat(1, m)) ** 6
        rhs = factor * (p**2 + 2 * p**4 * _rational_r_sum(m))
    elif which == "cor-aa":
        double = [
            sum(terms[j] * prefix[bound - j + 1] for j in range(bound + 1))
            for bound in range(p)
        ]
        lhs = sum(terms[i] * double[p - 1 - i] for i in range(p))
        factor = (pochhammer_rat(Fraction(2, 3), m) / pochhammer_rat(1, m)) ** 9
        rhs = factor * (p**3 - p**5 * harmonic2(m))
    else:
        raise ValueError("which must be 'cor-a' or 'cor-aa'")
    return _rat_to_padic(lhs, p, 6) == _rat_to_padic(rhs, p, 6)


def verify_classical(which: str, p: int, precision: int | None = None) -> bool:
    """The two classical supercongruences, against the Gamma-product form.

    'vanhamme-D2': sum to (p-1)/3 for p ≡ 1 (mod 6), default precision 4,
    right side -p·Γ_p(1/3)⁹.  'long-ramakrishna': sum to p-1 for any odd
    prime except 3, default precision 6, right side -p·Γ_p(1/3)⁹ or
    -(10/27)·p⁴·Γ_p(1/3)⁹ according to p mod 6.
    """
    if not is_prime(p) or p in (2, 3):
        raise ValueError("p must be an odd prime other than 3")
    if which == "vanhamme-D2":
        if p % 6 != 1:
            raise ValueError("vanhamme-D2 needs p ≡ 1 (mod 6)")
        n_prec = 4 if precision is None else precision
        upper = (p - 1) // 3
    elif which == "long-ramakrishna":
        n_prec = 6 if precision is None else precision
        upper = p - 1
    else:
        raise ValueError("which must be 'vanhamme-D2' or 'long-ramakrishna'")
    total = Fraction(0)
    for k in range(upper + 1):
        total += _central_term(k)
    lhs = _rat_to_padic(total, p, n_prec)
    gamma9 = morita_gamma(p, Fraction(1, 3), n_prec) ** 9
    if which == "vanhamme-D2" or p % 6 == 1:
        rhs = -p * gamma9
    else:
        rhs = _rat_to_padic(Fraction(-10, 27) * p**4, p, n_prec) * gamma9
    return lhs == rhs


PADIC_IDS: tuple[str, ...] = (
    "harmonic",
    "cor-a",
    "cor-aa",
    "vanhamme-D2",
    "long-ramakrishna",
)

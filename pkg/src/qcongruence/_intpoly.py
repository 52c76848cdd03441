"""Low-level dense polynomial kernel over the integers.

A polynomial is a tuple of plain ints, constant term first, with no trailing
zeros; the zero polynomial is the empty tuple.  The heavy operations
(multiplication, exact division, gcd) run through Kronecker substitution:
a polynomial with coefficients bounded by 2**(w-1) in absolute value is
identified with its value at 2**w, and GMP's integer multiply / divide / gcd
do the work.  Balanced base-2**w digits make the substitution reversible for
signed coefficients.

Every answer is certified, never trusted from a heuristic: products carry a
provable width bound, exact divisions are confirmed by a verification
multiply, and gcd candidates must both divide the inputs and reach the
degree bound certified by a gcd modulo a word-sized prime (the mod-p gcd
degree can only overestimate when the prime keeps the leading coefficients
alive, so matching it proves maximality).

Nothing in this module knows about rationals; callers keep a scalar
denominator alongside the integer vector.
"""

from __future__ import annotations

import gmpy2
import numpy as np
from gmpy2 import mpz

# Below this many output coefficients, schoolbook multiplication beats the
# packing overhead.
_SCHOOLBOOK_CUTOFF = 24

# Word-sized primes for gcd degree certificates; int64 stays exact because
# every intermediate is below 2**62.
_CERT_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)

# Pure-python remainder loops win below this divisor length; numpy slices
# win above it.
_NUMPY_REM_CUTOFF = 100


def trim(vec) -> tuple[int, ...]:
    """Drop trailing zeros, returning a canonical tuple."""
    n = len(vec)
    while n and vec[n - 1] == 0:
        n -= 1
    return tuple(vec[:n])


def max_bits(vec) -> int:
    """Bit length of the largest |coefficient| (0 for the zero polynomial)."""
    m = 0
    for c in vec:
        b = c.bit_length() if c >= 0 else (-c).bit_length()
        if b > m:
            m = b
    return m


def content(vec) -> int:
    """gcd of all coefficients (0 for the zero polynomial), always >= 0."""
    g = mpz(0)
    for c in vec:
        g = gmpy2.gcd(g, c)
        if g == 1:
            return 1
    return int(g)


def pack_signed(vec, width: int) -> mpz:
    """Evaluate the polynomial at 2**width (signed coefficients allowed)."""
    pos = [c if c > 0 else 0 for c in vec]
    neg = [-c if c < 0 else 0 for c in vec]
    return gmpy2.pack(pos, width) - gmpy2.pack(neg, width)


def unpack_signed(value: mpz, width: int) -> list[int]:
    """Balanced base-2**width digits of ``value`` (digits in [-2**(w-1), 2**(w-1))).

    The balanced representation is unique, so this inverts pack_signed exactly
    whenever the original coefficients fit the width; otherwise it returns the
    digits of some other polynomial with the same packed value, which callers
    detect by verification.
    """
    if value == 0:
        return []
    negate = value < 0
    raw = gmpy2.unpack(-value if negate else value, width)
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    carry = 0
    for d in raw:
        d = int(d) + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    if carry:
        out.append(carry)
    if negate:
        out = [-d for d in out]
    return out


def _mul_schoolbook(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def mul(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Product of two trimmed integer polynomials."""
    if not f or not g:
        return ()
    n = len(f) + len(g) - 1
    if n <= _SCHOOLBOOK_CUTOFF:
        return trim(_mul_schoolbook(f, g))
    width = max_bits(f) + max_bits(g) + min(len(f), len(g)).bit_length() + 2
    product = pack_signed(f, width) * pack_signed(g, width)
    digits = unpack_signed(product, width)
    digits += [0] * (n - len(digits))
    return trim(digits)


def exact_div(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Quotient f/g when g divides f exactly over the rationals.

    The quotient of two integer polynomials with integer quotient is found by
    dividing packed values; a verification multiply guards against both
    non-divisibility and recovery at an insufficient width.

    Raises ValueError if g does not divide f.
    """
    if not g:
        raise ZeroDivisionError("exact_div by zero polynomial")
    if not f:
        return ()
    if len(f) < len(g):
        raise ValueError("exact_div: divisor degree exceeds dividend degree")
    if len(g) == 1:
        d = g[0]
        out = []
        for c in f:
            qc, r = divmod(c, d)
            if r:
                raise ValueError("exact_div: not divisible")
            out.append(qc)
        return trim(out)
    n_quot = len(f) - len(g) + 1
    width = max(max_bits(f), max_bits(g)) + len(f).bit_length() + 8
    for _ in range(6):
        quot, rem = divmod(pack_signed(f, width), pack_signed(g, width))
        if rem != 0:
            raise ValueError("exact_div: not divisible")
        digits = unpack_signed(quot, width)
        if len(digits) <= n_quot:
            digits += [0] * (n_quot - len(digits))
            candidate = trim(digits)
            if mul(candidate, g) == f:
                return candidate
        width *= 2
    raise ValueError("exact_div: not divisible")


def _primitive(vec):
    c = content(vec)
    if c > 1:
        vec = tuple(x // c for x in vec)
    if vec and vec[-1] < 0:
        vec = tuple(-x for x in vec)
    return vec


def _divides(d, f) -> bool:
    try:
        exact_div(f, d)
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _modp_gcd_small(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        for top in range(len(a) - 1, db - 1, -1):
            c = a[top] * inv % p
            if c:
                base = top - db
                for j in range(db):
                    a[base + j] = (a[base + j] - c * b[j]) % p
        del a[db:]
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return a


def _modp_gcd_numpy(a, b, p: int) -> list[int]:
    # in-place Euclid on two int64 buffers; sizes only ever shrink
    while b.size:
        inv = pow(int(b[-1]), -1, p)
        db = b.size - 1
        body = b[:db]
        for top in range(a.size - 1, db - 1, -1):
            c = int(a[top]) * inv % p
            if c and db:
                a[top - db:top] = (a[top - db:top] - c * body) % p
        a = a[:db]
        size = a.size
        while size and not a[size - 1]:
            size -= 1
        a, b = b, a[:size]
    return a.tolist()


def modp_gcd(f: tuple[int, ...], g: tuple[int, ...], p: int) -> list[int] | None:
    """Monic gcd of the reductions of f and g modulo p.

    Its degree is a certified upper bound for deg gcd(f, g) whenever p
    divides neither leading coefficient (the reduction of the true gcd then
    survives with full degree and divides the mod-p gcd).  Returns None for
    a useless prime.
    """
    if f[-1] % p == 0 or g[-1] % p == 0:
        return None
    a = [c % p for c in f]
    b = [c % p for c in g]
    if len(a) < len(b):
        a, b = b, a
    if len(b) <= _NUMPY_REM_CUTOFF and len(a) <= 4 * _NUMPY_REM_CUTOFF:
        out = _modp_gcd_small(a, b, p)
    else:
        out = _modp_gcd_numpy(
            np.array(a, dtype=np.int64), np.array(b, dtype=np.int64), p
        )
    inv = pow(out[-1], -1, p)
    if inv != 1:
        out = [c * inv % p for c in out]
    return out


def _prime_stream():
    yield from _CERT_PRIMES
    p = mpz(_CERT_PRIMES[-1])
    while True:
        p = gmpy2.prev_prime(p)
        yield int(p)


def gcd(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive gcd (positive leading coefficient) of integer polynomials.

    A gcd modulo one good word prime certifies an upper degree bound, and a
    verified common divisor reaching that bound must be the gcd.  The fast
    route to a candidate is heuristic (integer gcd of the packed evaluations,
    balanced-digit recovery); when it stalls, the certain route reconstructs
    the gcd from its images modulo more word primes by Chinese remaindering.
    Either way the returned value has been proved, never guessed.
    """
    if not f:
        return _primitive(g)
    if not g:
        return _primitive(f)
    f = _primitive(f)
    g = _primitive(g)
    if f == g:
        return f
    if len(f) == 1 or len(g) == 1:
        return (1,)
    primes = _prime_stream()
    bound = None
    for p in primes:
        image = modp_gcd(f, g, p)
        if image is not None:
            bound = len(image) - 1
            break
    if bound == 0:
        return (1,)

    def accept(candidate):
        return (
            len(candidate) - 1 == bound
            and _divides(candidate, f)
            and _divides(candidate, g)
        )

    # two heuristic shots, then the certain route
    width = max(max_bits(f), max_bits(g)) + 4
    for _ in range(2):
        h = gmpy2.gcd(pack_signed(f, width), pack_signed(g, width))
        candidate = _primitive(trim(unpack_signed(h, width)))
        if accept(candidate):
            return candidate
        width = width * 2 + 7
    return _gcd_modular(f, g, bound, image, p, primes)


def _gcd_modular(f, g, bound, image, first_prime, primes):
    """Small-prime modular gcd; certain and immune to coefficient blowup.

    Images gamma * (monic gcd mod p) are combined by CRT until the balanced
    lift divides both inputs.  Primes whose image degree exceeds the best
    bound are unlucky and dropped; one whose image degree is smaller resets
    the accumulator and sharpens the bound.  Acceptance is proof: a common
    divisor with the certified maximal degree is the gcd.
    """
    gamma = int(gmpy2.gcd(f[-1], g[-1]))
    acc = [c * gamma % first_prime for c in image]
    acc_mod = first_prime
    while True:
        lifted = _balanced_lift(acc, acc_mod)
        candidate = _primitive(trim(lifted))
        if (
            candidate
            and len(candidate) - 1 == bound
            and _divides(candidate, f)
            and _divides(candidate, g)
        ):
            return candidate
        p = next(primes)
        if acc_mod % p == 0:
            continue
        image = modp_gcd(f, g, p)
        if image is None:
            continue
        if len(image) - 1 > bound:
            continue
        if len(image) - 1 < bound:
            if len(image) == 1:
                return (1,)
            bound = len(image) - 1
            acc = [c * gamma % p for c in image]
            acc_mod = p
            continue
        # same degree: fold into the accumulator coefficient by coefficient
        inv = pow(acc_mod, -1, p)
        scaled = [c * gamma % p for c in image]
        acc = [
            (a + (s - a) * inv % p * acc_mod) % (acc_mod * p)
            for a, s in zip(acc, scaled)
        ]
        acc_mod *= p


def _balanced_lift(vec, modulus):
    half = modulus >> 1
    return [c - modulus if c > half else c for c in vec]


def _gcd_primitive_prs(f, g):
    """Primitive polynomial remainder sequence; slow, certain, small inputs."""
    if len(f) < len(g):
        f, g = g, f
    while True:
        if not g:
            return _primitive(f)
        if len(g) == 1:
            return (1,)
        f, g = g, _primitive(_pseudo_rem(f, g))


def _pseudo_rem(f, g):
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f mod g, in ints."""
    lc = g[-1]
    rem = list(f)
    for _ in range(len(f) - len(g) + 1):
        coef = rem[-1]
        rem = [lc * c for c in rem]
        if coef:
            shift = len(rem) - len(g)
            for j in range(len(g)):
                rem[shift + j] -= coef * g[j]
        rem.pop()
    return trim(rem)

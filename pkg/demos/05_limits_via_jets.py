"""Evaluating a -> 1 limits with order-2 jets in eps = a - 1.

The parametric right sides have a double pole in (1 - a).  Multiplying by
(1-a)^2 = eps^2 and expanding to second order turns the limit into exact
rational-function arithmetic: the eps^0 and eps^1 coefficients must vanish,
and the limit is the eps^2 coefficient.

Run with:  python demos/05_limits_via_jets.py
"""

from qcongruence import EpsJet, QPoly, RatFun
from qcongruence.theorems import limit_sides, verify_limit

q = QPoly.q_power(1)

print("== jet arithmetic ==")
a = EpsJet.one_plus_eps()
print("a = 1 + eps:", a)
print("(1 - a)^2   :", (1 - a) ** 2)
print("1/a         :", 1 / a)
print("(1+eps)(1-eps):", a * EpsJet(RatFun(1), RatFun(-1), RatFun(0)))

print()
print("== the simplest limit, n = 1 ==")
extracted, closed = limit_sides(2, 1)
print("extracted:", extracted, "  closed form:", closed)

print()
print("== the displayed limits at real sizes ==")
for dim in (2, 3):
    for n in (4, 7, 10):
        print(f"dim {dim}, n={n}:", verify_limit(dim, n))

print()
print("== extraction refuses a jet that is not eps^2 * (finite limit) ==")
bad = EpsJet(RatFun(1), RatFun(0), RatFun(q))
try:
    bad.extract_limit(2)
except Exception as exc:
    print(type(exc).__name__, "-", exc)

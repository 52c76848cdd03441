"""q-integers, q-shifted factorials, term sequences and simplex sums.

Run with:  python demos/02_q_series.py
"""

from fractions import Fraction as F

from qcongruence import QMonomial, TermSpec, q_integer, q_pochhammer, simplex_sum, term
from qcongruence.padic import pochhammer_rat

print("== q-integers ==")
for s in (1, 3, 7):
    print(f"[{s}] =", q_integer(s))

print()
print("== q-shifted factorials over monomial arguments ==")
print("(q; q^3)_2      =", q_pochhammer(QMonomial.q(1), 3, 2))
print("(2q; q^3)_1     =", q_pochhammer(QMonomial(F(2), 1), 3, 1))
print("(q^-2; q)_1     =", q_pochhammer(QMonomial.q(-2), 1, 1))

print()
print("== the central term sequence ==")
spec = TermSpec.A()
for k in range(3):
    print(f"term {k}:", term(spec, k))

print()
print("its q -> 1 limit matches the rational rising-factorial ratio:")
for k in range(4):
    left = term(spec, k).evaluate(1)
    right = (6 * k + 1) * (pochhammer_rat(F(1, 3), k) / pochhammer_rat(F(1), k)) ** 6
    print(f"  k={k}: {left} == {right}: {left == right}")

print()
print("== parametrized terms degenerate to the central ones at a=b=1 ==")
print(term(TermSpec.B(F(1), F(1)), 2) == term(spec, 2))

print()
print("== brute-force simplex sums ==")
print("terms (1, x) with x=5, pairs with i+j<=1:", simplex_sum([1, 5], 2, 1))
print("same, i+j<=2 (missing entries are zero):  ", simplex_sum([1, 5], 2, 2))
double = simplex_sum(spec, 2, 3)
print("double sum of central terms to bound 3 has denominator degree",
      double.den.degree)

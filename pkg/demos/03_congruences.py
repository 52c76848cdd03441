"""Rational-function congruences and the three-modulus multiplier lemma.

Run with:  python demos/03_congruences.py
"""

import random
from fractions import Fraction as F

from qcongruence import (
    CongruenceClaim,
    ParamPoint,
    QPoly,
    RatFun,
    congruent_mod,
    cyclotomic,
    lemma22_multipliers,
    reduce_mod,
    verify_base_DE,
    verify_lemma22,
    verify_relations,
)
from qcongruence.congruence import sample_param_point

q = QPoly.q_power(1)
phi4 = cyclotomic(4)

print("== congruence semantics: A/B = C/D mod P iff P | AD - CB ==")
print("q^4 = 1 mod Phi_4:      ",
      congruent_mod(CongruenceClaim(RatFun.q_power(4), RatFun(1), phi4)))
print("1/(1-q) = (1+q)/2:      ",
      congruent_mod(CongruenceClaim(RatFun(1, 1 - q),
                                    RatFun(QPoly((F(1, 2), F(1, 2)))), phi4)))
print("q = 1 mod Phi_4 (false):",
      congruent_mod(CongruenceClaim(RatFun.q_power(1), RatFun(1), phi4)))
print("canonical residue of q^5:", reduce_mod(RatFun.q_power(5), phi4))

print()
print("== reciprocal-root congruences, random parameters ==")
rng = random.Random(0)
for t in (1, 2):
    print(f"t={t}, n=4, (a,b)=(2,3):", verify_relations(F(2), F(3), t, 4))

print()
print("== the four scalar multipliers at (a,b,c) = (2,3,5) ==")
point = ParamPoint(F(2), F(3), F(5))
mult = lemma22_multipliers(point)
print("x, y, u, v =", mult.x, mult.y, mult.u, mult.v)
print("all three multiplier congruences hold at n=4:", verify_lemma22(point, 4))
print("and at n=7:", verify_lemma22(point, 7))

print()
print("== five random admissible points at n=4 ==")
for _ in range(5):
    p = sample_param_point(rng)
    print(f"  (a,b,c)=({p.a},{p.b},{p.c}):", verify_lemma22(p, 4))

print()
print("== double-pole rewriting congruence ==")
print("(a,b)=(2,3), n=4:", verify_base_DE(F(2), F(3), 4))

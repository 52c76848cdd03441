"""The double- and triple-sum congruences modulo the sixth cyclotomic power.

Run with:  python demos/04_main_theorems.py
"""

import time
from fractions import Fraction as F

from qcongruence import CongruenceClaim, RatFun, congruent_mod
from qcongruence.congruence import ParamPoint
from qcongruence.theorems import (
    chain_sides,
    thm_a_sides,
    verify_base_a,
    verify_base_bc,
    verify_chain,
    verify_thm_a,
    verify_thm_aa,
    verify_thm_c,
    verify_thm_d,
)

print("== the headline congruences ==")
for n in (1, 4, 7, 10, 13):
    t0 = time.perf_counter()
    ok = verify_thm_a(n)
    print(f"double sum mod Phi_{n}^6: {ok}   ({time.perf_counter()-t0:.2f}s)")
for n in (1, 4, 7):
    t0 = time.perf_counter()
    ok = verify_thm_aa(n)
    print(f"triple sum mod Phi_{n}^6: {ok}   ({time.perf_counter()-t0:.2f}s)")

print()
print("== a perturbed right side is refuted, not accepted ==")
lhs, rhs, modulus = thm_a_sides(4)
broken = CongruenceClaim(lhs, rhs + RatFun.q_power(1), modulus)
print("with +q added:", congruent_mod(broken))

print()
print("== the two-parameter generalizations ==")
print("double, n=4, (a,b)=(2,3):", verify_thm_c(4, F(2), F(3)))
print("triple, n=4, (a,b)=(2,3):", verify_thm_d(4, F(2), F(3)))

print()
print("== the proof chain at n=4, (a,b,c)=(2,3,5) ==")
point = ParamPoint(F(2), F(3), F(5))
print("terminating sum vanishes:   ", verify_base_a(4, point))
print("closed forms (both special):", verify_base_bc(4, point, "B"),
      verify_base_bc(4, point, "C"))
for statement in ("wei-bb", "wei-cc", "wei-dd", "wei-ee", "wei-ef", "wei-ff"):
    _, _, modulus = chain_sides(statement, 4, point)
    ok = verify_chain(statement, 4, point)
    print(f"{statement}: {ok}   (modulus degree {modulus.degree})")

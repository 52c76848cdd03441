"""The q -> 1 corollaries: p-adic Gamma, harmonic collapse, supercongruences.

Run with:  python demos/06_padic_corollaries.py
"""

import time
from fractions import Fraction as F

from qcongruence import (
    RationalResidue,
    harmonic2,
    morita_gamma,
    pochhammer_rat,
    to_padic,
    verify_classical,
    verify_cor,
    verify_harmonic_identity,
)

print("== residues carry their prime and precision ==")
print("1/2 mod 7    :", to_padic(RationalResidue(F(1, 2), 7, 1)).value)
print("1/3 mod 7^2  :", to_padic(RationalResidue(F(1, 3), 7, 2)).value)

print()
print("== rational building blocks ==")
print("(1/3)_2      =", pochhammer_rat(F(1, 3), 2))
print("H2(4)        =", harmonic2(4))

print()
print("== p-adic Gamma via the factorial-like product ==")
print("Gamma_7(1)  mod 7^3:", morita_gamma(7, F(1), 3).value, " (this is -1)")
print("Gamma_7(2)  mod 7^3:", morita_gamma(7, F(2), 3).value)
print("Gamma_7(1/3) mod 7^2:", morita_gamma(7, F(1, 3), 2).value)
t0 = time.perf_counter()
g6 = morita_gamma(7, F(1, 3), 6)
print(f"Gamma_7(1/3) mod 7^6: {g6.value}   "
      f"({7**6} factors, {time.perf_counter()-t0:.3f}s)")

print()
print("== the harmonic collapse mod p ==")
for p in (7, 13, 19, 31):
    print(f"p={p}:", verify_harmonic_identity(p))

print()
print("== double and triple central-coefficient sums mod p^6 ==")
for p in (7, 13, 19):
    t0 = time.perf_counter()
    a = verify_cor("cor-a", p)
    aa = verify_cor("cor-aa", p)
    print(f"p={p}: double {a}, triple {aa}   ({time.perf_counter()-t0:.3f}s)")

print()
print("== classical supercongruences against the Gamma form ==")
print("truncated sum to (p-1)/3, p=7, mod p^4:",
      verify_classical("vanhamme-D2", 7))
print("full sum to p-1, p=7 (1 mod 6 branch), mod p^6:",
      verify_classical("long-ramakrishna", 7))
print("full sum to p-1, p=5 (5 mod 6 branch), mod p^6:",
      verify_classical("long-ramakrishna", 5))

"""Tour of the exact kernel: polynomials, rational functions, cyclotomics, CRT.

Run with:  python demos/01_exact_kernel.py
"""

from fractions import Fraction as F

from qcongruence import QPoly, RatFun, cyclotomic, poly_crt, poly_gcd, poly_xgcd

q = QPoly.q_power(1)

print("== dense rational polynomials ==")
p = (1 + q) * (1 - q)
print("(1+q)(1-q)            =", p)
quot, rem = (q**4 + 1).divrem(q**2 + 1)
print("(q^4+1) / (q^2+1)     =", quot, " remainder", rem)
print("gcd((q-2)^2(q+1), (q-2)(q+3)) =", poly_gcd((q - 2) ** 2 * (q + 1), (q - 2) * (q + 3)))

g, s, t = poly_xgcd(q**2 + 1, q - 1)
print("Bezout certificate: s*(q^2+1) + t*(q-1) =", s * (q**2 + 1) + t * (q - 1))

print()
print("== cyclotomic polynomials ==")
for n in (1, 4, 6, 12):
    print(f"Phi_{n}(q) =", cyclotomic(n))
product = QPoly((1,))
for d in (1, 2, 3, 4, 6, 12):
    product = product * cyclotomic(d)
print("product over divisors of 12 =", product, " (equals q^12 - 1)")

print()
print("== rational functions reduce eagerly ==")
f = RatFun(q**5 - q, q**3 - q)
print("(q^5-q)/(q^3-q)       =", f)
print("1/(1-q) - (1+q)/2     =", RatFun(1, 1 - q) - RatFun(QPoly((F(1, 2), F(1, 2)))))
print("q^-3 as a fraction    =", RatFun.q_power(-3))

print()
print("== polynomial Chinese remainder ==")
moduli = [q - 1, q + 1, q - 2]
target = QPoly((F(1, 3), F(2), F(-1)))
residues = [target.divrem(m)[1] for m in moduli]
print("residues of", target, "mod (q-1, q+1, q-2):", [str(r) for r in residues])
print("reconstructed:", poly_crt(residues, moduli))

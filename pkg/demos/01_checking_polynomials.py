"""
Checking single polynomials mod p
=================================

A polynomial of degree n satisfies the Casas-Alvero hypotheses over F_p when
it shares a root with each Hasse derivative P_1, ..., P_{n-1}. In
characteristic p the ordinary derivatives lose information (X^p has
derivative 0), so the Hasse derivatives P_i = sum binom(j, i) c_j X^(j-i)
are used instead.
"""

from casas_alvero import FpPoly, ca_check, hasse_derivative, parse_poly

# X^3 (X - 1)(X - 2) over F_7
P = parse_poly("x^5 - 3x^4 + 2x^3").to_fp(7)
v = ca_check(P)
print(P.format(), "->", v.verdict)
for d in v.per_derivative:
    print(f"  gcd(P, P_{d.i}) = {d.gcd.format()}   roots {sorted(r.value for r in d.shared_fp_roots)}")

# the Hasse derivatives themselves
for i in range(1, 5):
    print(f"P_{i} =", hasse_derivative(P, i).format())

# in characteristic 2 some derivatives vanish identically; gcd(P, 0) = P,
# so they count as sharing every root
Q = FpPoly.from_descending(2, [1, -1, 0, 0, 0, 0])
print(Q.format(), "mod 2 ->", ca_check(Q).verdict, [d.i for d in ca_check(Q).per_derivative if d.derivative_is_zero])

# a pure power is the expected shape, not a counterexample
print("X^5 mod 7 ->", ca_check(FpPoly.x(7) ** 5).verdict)

# the degree-6 example modulo a 53-bit prime
big = parse_poly("X^6 +3 144 481 702 696 843X^4 +X^3 +2 707 944 513 497 181X^2").to_fp(7390044713023799)
print("degree 6 ->", ca_check(big).verdict)

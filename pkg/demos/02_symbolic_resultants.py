"""
Symbolic resultants of the degree-5 family
==========================================

After an affine change of variable, a polynomial satisfying the hypotheses
can be taken monic with a double root at 0:  P = X^5 - aX^4 + bX^3 - cX^2.
The resultants Res_X(P, P_i) are polynomials in a, b, c computed here by a
fraction-free determinant of the Sylvester matrix.
"""

from casas_alvero import normalized_family, sylvester_resultant
from casas_alvero.sym_poly import content_strip, substitute

fam = normalized_family(5)
print("P   =", fam.poly)
for i in (2, 3, 4):
    print(f"P_{i} =", fam.hasse(i))

R = {i: sylvester_resultant(fam.poly, fam.hasse(i), "X") for i in (2, 3, 4)}
for i, f in R.items():
    print(f"Res(P, P_{i}) =", f)

# setting a = 0 leaves a monomial times a binomial in each resultant
for i in (2, 3):
    mono, cof = content_strip(substitute(R[i], {"a": 0}), "bc")
    print(f"a=0: Res(P, P_{i}) = ({mono}) * ({cof})")

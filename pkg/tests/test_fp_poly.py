from math import comb

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, strategies as st

from casas_alvero.errors import BothZero, DivisionByZeroPoly, ModulusMismatch, ZeroPolynomial
from casas_alvero.fp_poly import (
    FpPoly,
    from_roots,
    gcd_monic,
    hasse_derivative,
    radical_charp,
    resultant_fp,
    roots_in_fp,
)

from .conftest import SMALL_PRIMES

X = sympy.Symbol("X")


def P(p, *desc):
    return FpPoly.from_descending(p, desc)


def to_sympy(f):
    return sympy.Poly(list(reversed(f.coeffs)) or [0], X, modulus=f.p, symmetric=False)


@st.composite
def poly_pairs(draw, min_deg=0, max_deg=7):
    p = draw(st.sampled_from(SMALL_PRIMES))
    coeffs = st.lists(st.integers(0, p - 1), min_size=min_deg + 1, max_size=max_deg + 1)
    return FpPoly(p, draw(coeffs)), FpPoly(p, draw(coeffs))


def nonconstant(f):
    return f.degree >= 1


# ---- examples -------------------------------------------------------------


def test_from_roots_examples():
    assert from_roots(11, [0, 0, -1, -3, 4]) == P(11, 1, 0, -2, -1, 0, 0)
    assert from_roots(8009, {0: 2, 1: 1, 2113: 1, -2109: 1}) == P(8009, 1, -5, -3309, 3313, 0, 0)
    assert P(7, 1, -3, 2, 0, 0, 0)(2) == 0


def test_ring_ops():
    f, g = P(7, 1, 2, 3), P(7, 1, 1)
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree
    assert (f - f).is_zero()
    assert f + 0 == f
    with pytest.raises(DivisionByZeroPoly):
        divmod(f, FpPoly(7))
    with pytest.raises(ModulusMismatch):
        f + P(11, 1)
    assert FpPoly(7).degree == -1


def test_format():
    assert P(8009, 1, -5, -3309, 3313, 0, 0).format() == "X^5 - 5X^4 - 3309X^3 + 3313X^2"
    assert P(7, 1, -3, 2, 0, 0, 0).format(signed=False) == "X^5 + 4X^4 + 2X^3"


def test_hasse_examples():
    f = P(101, 1, -7, 11, -13, 0, 0)
    a, b, c = 7, 11, 13
    assert hasse_derivative(f, 2) == P(101, 10, -6 * a, 3 * b, -c)
    assert hasse_derivative(f, 0) == f
    assert hasse_derivative(FpPoly.x(7) ** 7, 1).is_zero()
    assert hasse_derivative(P(2, 1, -1, 0, 0, 0, 0), 3).is_zero()
    # a Hasse derivative need not vanish where the formal one does
    assert hasse_derivative(FpPoly.x(5) ** 5, 5) == P(5, 1)


def test_gcd_examples():
    x = FpPoly.x(13)
    assert gcd_monic(x**2 * (x - 1), x * (x - 1)) == x**2 - x
    assert gcd_monic(P(7, 1, -3, 2, 0, 0, 0), P(7, 3, 3, 6, 0)) == FpPoly.x(7)
    f = P(7, 3, 1, 2)
    assert gcd_monic(f, FpPoly(7)) == f.monic()
    assert gcd_monic(FpPoly(7), f) == f.monic()
    with pytest.raises(BothZero):
        gcd_monic(FpPoly(7), FpPoly(7))


def test_resultant_examples():
    f1, f2 = P(8009, 9, -16, 4), P(8009, -20, 9, 40)
    assert resultant_fp(f1, f2) == 0
    assert resultant_fp(P(7, 9, -16, 4), P(7, -20, 9, 40)) == 32036 % 7 == 4
    f = P(13, 1, 4, 2)
    assert resultant_fp(f, f) == 0
    with pytest.raises(ZeroPolynomial):
        resultant_fp(f, FpPoly(13))


def test_radical_examples():
    assert radical_charp(P(5, 1, 0, 0, 0, 0, -3)) == P(5, 1, -3)
    assert radical_charp(P(11, 1, 0, -2, -1, 0, 0)) == from_roots(11, [0, -1, -3, 4])
    for p in (2, 3, 7):
        assert radical_charp(FpPoly.x(p) ** 2) == FpPoly.x(p)
    # (X - 1)^3 (X - 2)^9 over F_3 needs the p-th root descent twice
    x = FpPoly.x(3)
    assert radical_charp((x - 1) ** 3 * (x - 2) ** 9) == (x - 1) * (x - 2)


def test_roots_examples():
    assert {r.value for r in roots_in_fp(P(8009, 5, -5))} == {1}
    assert roots_in_fp(P(7, 1, 0, 1)) == set()
    for p in (7, 67, 193):
        x = FpPoly.x(p)
        assert {r.value for r in roots_in_fp(x**p - x)} == set(range(p))
    with pytest.raises(ZeroPolynomial):
        roots_in_fp(FpPoly(7))


# ---- properties ------------------------------------------------------------


@given(poly_pairs(), st.integers(0, 10**6))
def test_hasse_defining_identity(pair, h):
    # P(X + h) = sum_i P_i(h) X^i
    f, _ = pair
    p = f.p
    shifted = f.compose(FpPoly(p, [h, 1]))
    expected = FpPoly(p, [hasse_derivative(f, i)(h).value for i in range(max(f.degree, 0) + 1)])
    assert shifted == expected


@given(poly_pairs(), st.integers(0, 8))
def test_hasse_leibniz(pair, k):
    f, g = pair
    rhs = FpPoly(f.p)
    for i in range(k + 1):
        rhs = rhs + hasse_derivative(f, i) * hasse_derivative(g, k - i)
    assert hasse_derivative(f * g, k) == rhs


@given(poly_pairs(), st.integers(0, 8))
def test_hasse_coefficient_formula(pair, i):
    f, _ = pair
    expected = [comb(j, i) * c for j, c in enumerate(f.coeffs) if j >= i]
    assert hasse_derivative(f, i) == FpPoly(f.p, expected)


@given(poly_pairs())
def test_gcd_matches_sympy(pair):
    f, g = pair
    if f.is_zero() and g.is_zero():
        return
    expected = sympy.gcd(to_sympy(f), to_sympy(g)).monic()
    assert list(reversed(gcd_monic(f, g).coeffs)) == [int(c) % f.p for c in expected.all_coeffs()]


@given(poly_pairs(min_deg=1))
def test_resultant_swap_sign(pair):
    f, g = pair
    if not (nonconstant(f) or nonconstant(g)) or f.is_zero() or g.is_zero():
        return
    m, n = f.degree, g.degree
    assert resultant_fp(g, f) == (-1) ** (m * n) * resultant_fp(f, g)


@given(poly_pairs(min_deg=1, max_deg=5), st.lists(st.integers(0, 100), min_size=2, max_size=5))
def test_resultant_multiplicative(pair, extra):
    f, g = pair
    h = FpPoly(f.p, extra)
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    assert resultant_fp(f, g * h) == resultant_fp(f, g) * resultant_fp(f, h)


@given(poly_pairs(min_deg=1, max_deg=6))
def test_resultant_matches_sympy(pair):
    f, g = pair
    if f.is_zero() or g.is_zero():
        return
    # sympy.resultant disagrees in sign with the Sylvester determinant when
    # deg f < deg g (e.g. Res(X, X^3 + 1)), so use the explicit matrix
    expected = sylvester(to_sympy(f).as_expr(), to_sympy(g).as_expr(), X).det()
    assert resultant_fp(f, g) == int(expected) % f.p


@given(poly_pairs(min_deg=1))
def test_resultant_vanishes_iff_common_factor(pair):
    f, g = pair
    if f.is_zero() or g.is_zero():
        return
    assert (resultant_fp(f, g) == 0) == (gcd_monic(f, g).degree >= 1)


@given(poly_pairs(min_deg=1))
def test_roots_match_scan(pair):
    f, _ = pair
    if f.is_zero():
        return
    assert {r.value for r in roots_in_fp(f)} == {x for x in range(f.p) if f(x) == 0}


@given(st.sampled_from([67, 71, 193, 8009]), st.lists(st.integers(0, 10**5), min_size=1, max_size=6))
def test_roots_large_prime_from_roots(p, rs):
    f = from_roots(p, rs) * FpPoly(p, [3, 0, 1])
    expected = {r % p for r in rs} | {x for x in range(p) if (x * x + 3) % p == 0}
    assert {r.value for r in roots_in_fp(f)} == expected


@given(poly_pairs(min_deg=1))
def test_radical_squarefree_same_roots(pair):
    f, _ = pair
    if f.degree < 1:
        return
    rad = radical_charp(f)
    # squarefree: coprime to its derivative unless constant
    assert rad.degree == 0 or gcd_monic(rad, rad.derivative()).degree == 0
    # same roots over the closure: rad | f and f | rad^deg f
    assert (f % rad).is_zero()
    assert (rad ** f.degree % f.monic()).is_zero()

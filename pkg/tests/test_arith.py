import pytest
import sympy
from hypothesis import given, strategies as st

from casas_alvero.arith import (
    FpElem,
    PrimeModulus,
    factor,
    fp_add,
    fp_inv,
    fp_mul,
    fp_neg,
    fp_pow,
    fp_sub,
    is_prime,
)
from casas_alvero.errors import FactorBudgetExceeded, ModulusMismatch, NotPrime, ZeroInverse


def egcd_inverse(x, p):
    # independent extended Euclid oracle
    r0, r1, s0, s1 = p, x % p, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    assert r0 == 1
    return s0 % p


def test_inverse_examples():
    assert fp_inv(FpElem(1, 8009)) == 1
    assert fp_inv(FpElem(11, 193)).value == 158 == egcd_inverse(11, 193)
    assert fp_inv(FpElem(41, 131)).value == 16 == egcd_inverse(41, 131)
    with pytest.raises(ZeroInverse):
        fp_inv(FpElem(0, 7))


def test_scalar_ops():
    assert fp_mul(FpElem(5, 7), FpElem(5, 7)) == 4
    p = 7390044713023799
    assert fp_mul(FpElem(p - 1, p), FpElem(p - 1, p)) == 1
    assert fp_mul(FpElem(239, 8009), FpElem(2113, 8009)) == 440
    assert FpElem(440, 8009) / 239 == 2113
    assert fp_add(FpElem(6, 7), FpElem(3, 7)) == 2
    assert fp_sub(FpElem(2, 7), FpElem(5, 7)) == 4
    assert fp_neg(FpElem(0, 7)) == 0
    assert fp_pow(FpElem(3, 7), 6) == 1
    assert FpElem(-1, 11).value == 10
    assert FpElem(10, 11).signed() == -1
    with pytest.raises(ModulusMismatch):
        fp_add(FpElem(1, 7), FpElem(1, 11))


def test_prime_modulus_validation():
    assert PrimeModulus(8009).p == 8009
    for bad in (0, 1, 4, 32036, 1 << 62):
        with pytest.raises(NotPrime):
            PrimeModulus(bad)


def test_is_prime_examples():
    assert is_prime(8009)
    assert not is_prime(32036)
    assert is_prime(7390044713023799)
    assert [n for n in range(60) if is_prime(n)] == list(sympy.primerange(0, 60))


@given(st.integers(min_value=0, max_value=(1 << 62) - 1))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_strong_pseudoprimes():
    # composites that fool several fixed-base tests
    for n in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    assert is_prime((1 << 61) - 1)


@pytest.mark.parametrize(
    "n, sign, factors",
    [
        (32036, 1, [(2, 2), (8009, 1)]),
        (38951, 1, [(11, 1), (3541, 1)]),
        (-524, -1, [(2, 2), (131, 1)]),
        (9584, 1, [(2, 4), (599, 1)]),
        (386, 1, [(2, 1), (193, 1)]),
        (256, 1, [(2, 8)]),
        (-14, -1, [(2, 1), (7, 1)]),
        (1, 1, []),
    ],
)
def test_factor_eliminants(n, sign, factors):
    fz = factor(n)
    assert fz.sign == sign
    assert list(fz.factors) == factors
    assert fz.value() == n


def test_factor_display():
    assert str(factor(32036)) == "2^2.8009"
    assert str(factor(-524)) == "-2^2.131"


@given(st.integers(min_value=-(10**15), max_value=10**15).filter(bool))
def test_factor_matches_sympy(n):
    fz = factor(n)
    assert dict(fz.factors) == sympy.factorint(abs(n))
    assert fz.value() == n
    assert all(is_prime(q) for q, _ in fz.factors)


def test_factor_large_semiprime():
    n = 7390044713023799 * 100000007
    assert dict(factor(n).factors) == {100000007: 1, 7390044713023799: 1}


def test_factor_zero_and_budget():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(FactorBudgetExceeded):
        factor((10**30 + 57) * (10**30 + 91))

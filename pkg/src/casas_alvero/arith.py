"""
Exact scalar arithmetic: prime moduli, residues mod p, primality and
factorization of machine-size integers.

Residues are always stored in canonical form ``0 <= value < p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import FactorBudgetExceeded, ModulusMismatch, NotPrime, ZeroInverse

MODULUS_CAP = 1 << 62

# Witness sets are deterministic below the bound they are paired with.
_MR_SMALL_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_MR_SMALL_LIMIT = 1 << 64
_MR_LARGE_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LARGE_LIMIT = 3317044064679887385961981

TRIAL_DIVISION_BOUND = 1 << 21
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _mr_round(a: int, d: int, s: int, n: int) -> bool:
    """True when ``a`` does not witness compositeness of ``n``."""
    a %= n
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test.

    >>> is_prime(8009), is_prime(32036), is_prime(7390044713023799)
    (True, False, True)
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < _MR_SMALL_LIMIT:
        bases = _MR_SMALL_BASES
    elif n < _MR_LARGE_LIMIT:
        bases = _MR_LARGE_BASES
    else:
        raise ValueError(f"primality of {n} is outside the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_mr_round(a, d, s, n) for a in bases)


@dataclass(frozen=True)
class PrimeModulus:
    """A certified prime below 2**62."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError("modulus must be an int")
        if not 2 <= self.p < MODULUS_CAP or not is_prime(self.p):
            raise NotPrime(f"{self.p} is not a prime below 2^62")

    def __call__(self, value: int) -> FpElem:
        return FpElem(value, self)

    def __int__(self):
        return self.p

    def __repr__(self):
        return f"PrimeModulus({self.p})"


def as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class FpElem:
    """An element of F_p in canonical form."""

    value: int
    modulus: PrimeModulus = field(repr=False)

    def __post_init__(self):
        if not isinstance(self.modulus, PrimeModulus):
            object.__setattr__(self, "modulus", PrimeModulus(self.modulus))
        object.__setattr__(self, "value", self.value % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _other(self, other) -> int:
        if isinstance(other, FpElem):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(f"mod {self.p} vs mod {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElem(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return fp_inv(self) ** (-e)
        return FpElem(pow(self.value, e, self.p), self.modulus)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * fp_inv(FpElem(o, self.modulus))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElem(o, self.modulus) * fp_inv(self)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.value == other.value and self.p == other.p
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def signed(self) -> int:
        """Balanced representative in (-p/2, p/2]."""
        v = self.value
        return v - self.p if v > self.p // 2 else v


def fp_inv(x: FpElem) -> FpElem:
    if x.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {x.p}")
    return FpElem(pow(x.value, -1, x.p), x.modulus)


def fp_add(x: FpElem, y: FpElem) -> FpElem:
    return x + y


def fp_sub(x: FpElem, y: FpElem) -> FpElem:
    return x - y


def fp_mul(x: FpElem, y: FpElem) -> FpElem:
    return x * y


def fp_neg(x: FpElem) -> FpElem:
    return -x


def fp_pow(x: FpElem, e: int) -> FpElem:
    return x**e


@dataclass(frozen=True)
class Factorization:
    """``sign * prod(q**e for q, e in factors)``; primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for q, e in self.factors:
            out *= q**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def __str__(self):
        body = ".".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors) or "1"
        return ("-" if self.sign < 0 else "") + body


def _pollard_brent(n: int, seed: int) -> int | None:
    # Brent's cycle detection with batched gcds
    y, c, m = seed % n, (2 * seed + 1) % n, 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        if r > 1 << 26:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, out: dict, attempts: int):
    if n == 1:
        return
    if n >= _MR_LARGE_LIMIT:
        raise FactorBudgetExceeded(f"cofactor {n} exceeds the certified range")
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    for seed in range(1, attempts + 1):
        d = _pollard_brent(n, seed)
        if d is not None and 1 < d < n:
            _split(d, out, attempts)
            _split(n // d, out, attempts)
            return
    raise FactorBudgetExceeded(f"could not split {n}")


def factor(n: int, attempts: int = 20) -> Factorization:
    """Factor a nonzero integer.

    >>> str(factor(32036)), str(factor(-524))
    ('2^2.8009', '-2^2.131')
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
    q = 5
    step = 2
    while q < TRIAL_DIVISION_BOUND and q * q <= n:
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    if n > 1:
        if q * q > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, found, attempts)
    return Factorization(sign, tuple(sorted(found.items())))

"""
Dense univariate polynomials over F_p.

Coefficients are canonical residues stored low degree first; the zero
polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from math import comb

from .arith import FpElem, PrimeModulus, as_modulus
from .errors import BothZero, DivisionByZeroPoly, ModulusMismatch, ZeroPolynomial

# Above this modulus, roots are found by gcd with X^p - X and
# equal-degree splitting instead of scanning every residue.
SCAN_LIMIT = 64


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    # b is trimmed and nonzero
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        coef = r[k + db] * inv % p
        q[k] = coef
        if coef:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - coef * b[j]) % p
    return _trim(q), _trim(r[:db])


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _eval(c, x: int, p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = (acc * x + v) % p
    return acc


class FpPoly:
    """Polynomial over F_p with canonical, trimmed coefficients."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs: Iterable[int] = ()):
        modulus = as_modulus(modulus)
        p = modulus.p
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(_trim([int(v) % p for v in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def _raw(cls, modulus: PrimeModulus, coeffs: list[int]) -> FpPoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def x(cls, modulus) -> FpPoly:
        return cls(modulus, (0, 1))

    @classmethod
    def constant(cls, modulus, value: int) -> FpPoly:
        return cls(modulus, (value,))

    @classmethod
    def from_descending(cls, modulus, coeffs: Iterable[int]) -> FpPoly:
        return cls(modulus, list(coeffs)[::-1])

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FpElem:
        return FpElem(self.coeffs[i] if 0 <= i < len(self.coeffs) else 0, self.modulus)

    def _check(self, other) -> FpPoly:
        if isinstance(other, FpElem):
            other = FpPoly(other.modulus, (other.value,))
        elif isinstance(other, int):
            other = FpPoly(self.modulus, (other,))
        elif not isinstance(other, FpPoly):
            return NotImplemented
        if other.p != self.p:
            raise ModulusMismatch(f"mod {self.p} vs mod {other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % self.p
        return FpPoly._raw(self.modulus, _trim(out))

    __radd__ = __add__

    def __neg__(self):
        return FpPoly._raw(self.modulus, [(-v) % self.p for v in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FpPoly._raw(self.modulus, _mul(list(self.coeffs), list(other.coeffs), self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = FpPoly(self.modulus, (1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.p)
        return FpPoly._raw(self.modulus, q), FpPoly._raw(self.modulus, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FpPoly(self.modulus, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __call__(self, x) -> FpElem:
        return FpElem(_eval(self.coeffs, int(x) % self.p, self.p), self.modulus)

    def __repr__(self):
        return f"FpPoly({self.format()} mod {self.p})"

    def descending(self, signed: bool = False) -> list[int]:
        p = self.p
        c = list(reversed(self.coeffs)) or [0]
        if signed:
            c = [v - p if v > p // 2 else v for v in c]
        return c

    def format(self, var: str = "X", signed: bool = True) -> str:
        """Human-readable form, balanced residues by default."""
        if not self.coeffs:
            return "0"
        p = self.p
        parts = []
        for e in range(self.degree, -1, -1):
            v = self.coeffs[e]
            if not v:
                continue
            if signed and v > p // 2:
                v -= p
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            mag = abs(v)
            body = str(mag) if (mag != 1 or not mono) else ""
            body += mono
            if not parts:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append(("- " if v < 0 else "+ ") + body)
        return " ".join(parts)

    def scale(self, k) -> FpPoly:
        k = int(k) % self.p
        return FpPoly._raw(self.modulus, _trim([v * k % self.p for v in self.coeffs]))

    def monic(self) -> FpPoly:
        if not self.coeffs:
            return self
        return self.scale(pow(self.lead, -1, self.p))

    def derivative(self) -> FpPoly:
        p = self.p
        return FpPoly._raw(self.modulus, _trim([j * self.coeffs[j] % p for j in range(1, len(self.coeffs))]))

    def compose(self, inner: FpPoly) -> FpPoly:
        out = FpPoly(self.modulus)
        for v in reversed(self.coeffs):
            out = out * inner + v
        return out

    def hasse(self, i: int) -> FpPoly:
        return hasse_derivative(self, i)


def poly_add(f: FpPoly, g: FpPoly) -> FpPoly:
    return f + g


def poly_sub(f: FpPoly, g: FpPoly) -> FpPoly:
    return f - g


def poly_mul(f: FpPoly, g: FpPoly) -> FpPoly:
    return f * g


def poly_divrem(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    return divmod(f, g)


def poly_eval(f: FpPoly, x) -> FpElem:
    return f(x)


def poly_scale(f: FpPoly, k) -> FpPoly:
    return f.scale(k)


def from_roots(modulus, roots: Iterable[int] | Mapping[int, int]) -> FpPoly:
    """Build prod (X - r)^m.

    ``roots`` is either a mapping root -> multiplicity or an iterable in
    which repeated roots count with multiplicity.
    """
    modulus = as_modulus(modulus)
    p = modulus.p
    items = roots.items() if isinstance(roots, Mapping) else ((r, 1) for r in roots)
    c = [1]
    for r, m in items:
        r = int(r) % p
        for _ in range(m):
            c = _mul(c, [(-r) % p, 1], p)
    return FpPoly._raw(modulus, c)


def hasse_derivative(f: FpPoly, i: int) -> FpPoly:
    """i-th Hasse derivative: X^j maps to binom(j, i) X^(j-i)."""
    if i < 0:
        raise ValueError("Hasse derivative order must be >= 0")
    p = f.p
    c = f.coeffs
    return FpPoly._raw(f.modulus, _trim([comb(j, i) * c[j] % p for j in range(i, len(c))]))


def gcd_monic(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd, with gcd(f, 0) = monic(f)."""
    if f.p != g.p:
        raise ModulusMismatch(f"mod {f.p} vs mod {g.p}")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    return FpPoly._raw(f.modulus, _gcd(list(f.coeffs), list(g.coeffs), f.p))


def resultant_fp(f: FpPoly, g: FpPoly) -> FpElem:
    """Resultant by the Euclidean scheme, Sylvester sign convention."""
    if f.p != g.p:
        raise ModulusMismatch(f"mod {f.p} vs mod {g.p}")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    p = f.p
    a, b = list(f.coeffs), list(g.coeffs)
    acc = 1
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            acc = acc * pow(b[0], m, p) % p
            break
        r = _divmod(a, b, p)[1]
        if not r:
            acc = 0
            break
        k = len(r) - 1
        if (m * n) % 2:
            acc = -acc
        acc = acc * pow(b[-1], m - k, p) % p
        a, b = b, r
    return FpElem(acc, f.modulus)


def _pth_root(f: FpPoly) -> FpPoly:
    # f has zero derivative, so f(X) = q(X^p) = q(X)^p over F_p
    p = f.p
    return FpPoly._raw(f.modulus, [f.coeffs[j] for j in range(0, len(f.coeffs), p)])


def radical_charp(f: FpPoly) -> FpPoly:
    """Monic squarefree polynomial with the same roots as ``f`` in the closure."""
    if f.is_zero():
        raise ZeroPolynomial("radical of the zero polynomial")
    f = f.monic()
    if f.degree <= 0:
        return f
    d = f.derivative()
    if d.is_zero():
        return radical_charp(_pth_root(f))
    g = gcd_monic(f, d)
    w = f // g
    if g.degree == 0:
        return w
    # factors with multiplicity divisible by p live only in g
    rg = radical_charp(g)
    return w * (rg // gcd_monic(w, rg))


def powmod(base: FpPoly, e: int, mod: FpPoly) -> FpPoly:
    p = base.p
    m = list(mod.coeffs)
    result = [1]
    b = _divmod(list(base.coeffs), m, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, b, p), m, p)[1]
        b = _divmod(_mul(b, b, p), m, p)[1]
        e >>= 1
    return FpPoly._raw(base.modulus, _divmod(result, m, p)[1])


def _split_linear(g: FpPoly, out: set[int]):
    # g is monic, squarefree and splits into distinct linear factors over F_p
    if g.degree <= 0:
        return
    if g.degree == 1:
        out.add((-g.coeffs[0]) % g.p)
        return
    p = g.p
    half = (p - 1) // 2
    for delta in range(p):
        t = powmod(FpPoly(g.modulus, (delta, 1)), half, g) - 1
        h = gcd_monic(g, t) if not t.is_zero() else g
        if 0 < h.degree < g.degree:
            _split_linear(h, out)
            _split_linear(g // h, out)
            return
    raise RuntimeError("equal-degree splitting failed")


def roots_in_fp(f: FpPoly) -> set[FpElem]:
    """The set of F_p-rational roots."""
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    p = f.p
    if f.degree <= 0:
        return set()
    if p <= SCAN_LIMIT:
        return {FpElem(x, f.modulus) for x in range(p) if _eval(f.coeffs, x, p) == 0}
    f = f.monic()
    xp = powmod(FpPoly.x(f.modulus), p, f)
    g = gcd_monic(f, xp - FpPoly.x(f.modulus))
    found: set[int] = set()
    _split_linear(g, found)
    return {FpElem(x, f.modulus) for x in found}

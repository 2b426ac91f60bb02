"""
Sparse multivariate polynomials with exact integer coefficients.

Variables come from a fixed ordered alphabet; exponent vectors are tuples
over that alphabet and terms are iterated in descending lexicographic
order, which is also the printing order.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import cached_property
from math import comb, gcd

from .arith import FpElem, as_modulus
from .errors import (
    DegenerateInput,
    NotBinomialPair,
    NotExactDivision,
    NotHomogeneous,
    UnboundVariables,
    ZeroPolynomial,
)
from .fp_poly import FpPoly

VARS = ("X", "a", "b", "c", "x1", "x2", "x3", "r", "h")
NVARS = len(VARS)
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


def _index(var: str) -> int:
    try:
        return _INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


def _add_exp(e1, e2):
    return tuple(x + y for x, y in zip(e1, e2))


class MPolyZ:
    """Immutable element of Z[X, a, b, c, x1, x2, x3, r, h]."""

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        for e, v in (terms or {}).items():
            if v:
                if len(e) != NVARS:
                    raise ValueError("exponent vector has the wrong length")
                clean[tuple(e)] = int(v)
        self.terms = clean

    @classmethod
    def var(cls, name: str) -> MPolyZ:
        e = [0] * NVARS
        e[_index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def const(cls, k: int) -> MPolyZ:
        return cls({_ZERO_EXP: k})

    @classmethod
    def coerce(cls, x) -> MPolyZ:
        if isinstance(x, MPolyZ):
            return x
        if isinstance(x, int):
            return cls.const(x)
        return NotImplemented

    @classmethod
    def from_coeffs(cls, coeffs, var: str) -> MPolyZ:
        """Sum of coeffs[k] * var^k; coefficients are ints or MPolyZ."""
        v = cls.var(var)
        out = cls()
        for k, c in enumerate(coeffs):
            out = out + cls.coerce(c) * v**k
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(_ZERO_EXP, 0)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), reverse=True)

    @cached_property
    def _hash(self):
        return hash(frozenset(self.terms.items()))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        other = MPolyZ.coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __add__(self, other):
        other = MPolyZ.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out.get(e, 0) + v
        return MPolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return MPolyZ({e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        other = MPolyZ.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = MPolyZ.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = MPolyZ.coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, int] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + v1 * v2
        return MPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MPolyZ.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"MPolyZ({self})"

    def __str__(self):
        return format_mpoly(self)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(VARS[i] for i, k in enumerate(e) if k)
        return used

    def degree_in(self, var: str) -> int:
        i = _index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coeffs_in(self, var: str) -> list[MPolyZ]:
        """Coefficients as a polynomial in ``var``, lowest power first."""
        i = _index(var)
        d = self.degree_in(var)
        buckets: list[dict] = [{} for _ in range(d + 1)]
        for e, v in self.terms.items():
            k = e[i]
            buckets[k][e[:i] + (0,) + e[i + 1:]] = v
        return [MPolyZ(b) for b in buckets]

    def leading_term(self) -> tuple[tuple, int]:
        return max(self.terms.items())

    def content(self) -> int:
        g = 0
        for v in self.terms.values():
            g = gcd(g, v)
        return g

    def evaluate(self, bindings: Mapping[str, int]) -> int:
        total = 0
        vals = [bindings.get(v) for v in VARS]
        for e, coef in self.terms.items():
            t = coef
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise UnboundVariables(f"variable {VARS[i]} is unbound")
                    t *= vals[i] ** k
            total += t
        return total


def var(name: str) -> MPolyZ:
    return MPolyZ.var(name)


def symbols(names: str) -> tuple[MPolyZ, ...]:
    return tuple(MPolyZ.var(n) for n in names.split())


def format_mpoly(f: MPolyZ) -> str:
    """Canonical text: descending lex order, ``*`` between factors."""
    if f.is_zero():
        return "0"
    parts = []
    for e, v in f.sorted_terms():
        factors = [VARS[i] if k == 1 else f"{VARS[i]}^{k}" for i, k in enumerate(e) if k]
        mag = abs(v)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if v < 0 else "") + body)
        else:
            parts.append(("- " if v < 0 else "+ ") + body)
    return " ".join(parts)


def mp_add(f: MPolyZ, g: MPolyZ) -> MPolyZ:
    return f + g


def mp_sub(f: MPolyZ, g: MPolyZ) -> MPolyZ:
    return f - g


def mp_mul(f: MPolyZ, g: MPolyZ) -> MPolyZ:
    return f * g


def mp_neg(f: MPolyZ) -> MPolyZ:
    return -f


def mp_pow(f: MPolyZ, k: int) -> MPolyZ:
    return f**k


def substitute(f: MPolyZ, bindings: Mapping[str, MPolyZ | int]) -> MPolyZ:
    """Simultaneous substitution of variables by polynomials."""
    idx = {_index(v): MPolyZ.coerce(g) for v, g in bindings.items()}
    cache: dict[tuple[int, int], MPolyZ] = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = idx[i] ** k
        return cache[key]

    out: dict[tuple, int] = {}
    acc = MPolyZ()
    for e, v in f.terms.items():
        rest = tuple(0 if i in idx else k for i, k in enumerate(e))
        bound = [(i, k) for i, k in enumerate(e) if k and i in idx]
        if not bound:
            out[rest] = out.get(rest, 0) + v
            continue
        t = MPolyZ({rest: v})
        for i, k in bound:
            t = t * power(i, k)
        acc = acc + t
    return acc + MPolyZ(out)


def hasse_symbolic(f: MPolyZ, i: int, var: str) -> MPolyZ:
    """i-th Hasse derivative with respect to ``var``."""
    if i < 0:
        raise ValueError("Hasse derivative order must be >= 0")
    j = _index(var)
    out = {}
    for e, v in f.terms.items():
        k = e[j]
        if k >= i:
            ne = e[:j] + (k - i,) + e[j + 1:]
            out[ne] = out.get(ne, 0) + comb(k, i) * v
    return MPolyZ(out)


def exact_div(f: MPolyZ, g: MPolyZ) -> MPolyZ:
    """Quotient f / g, raising unless the division is exact in Z[vars]."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        k = g.constant_value()
        out = {}
        for e, v in f.terms.items():
            q, rem = divmod(v, k)
            if rem:
                raise NotExactDivision(f"{f} is not divisible by {k}")
            out[e] = q
        return MPolyZ(out)
    ge, gv = g.leading_term()
    rem = dict(f.terms)
    quot: dict[tuple, int] = {}
    gitems = list(g.terms.items())
    while rem:
        re_, rv = max(rem.items())
        de = tuple(x - y for x, y in zip(re_, ge))
        if min(de) < 0 or rv % gv:
            raise NotExactDivision(f"{f} is not divisible by {g}")
        q = rv // gv
        quot[de] = q
        for e, v in gitems:
            ne = _add_exp(e, de)
            nv = rem.get(ne, 0) - q * v
            if nv:
                rem[ne] = nv
            else:
                rem.pop(ne, None)
    return MPolyZ(quot)


def _div(a, b):
    if isinstance(a, MPolyZ) or isinstance(b, MPolyZ):
        return exact_div(MPolyZ.coerce(a), MPolyZ.coerce(b))
    q, rem = divmod(a, b)
    if rem:
        raise NotExactDivision(f"{a} is not divisible by {b}")
    return q


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, MPolyZ) else x == 0


def bareiss_det(matrix):
    """Fraction-free determinant of a square matrix over Z or Z[vars]."""
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0 * m[k][k]
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(f: MPolyZ, g: MPolyZ, var: str) -> list[list[MPolyZ]]:
    """Sylvester matrix with the rows of ``f`` on top."""
    fc = f.coeffs_in(var)[::-1]
    gc = g.coeffs_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MPolyZ()
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: MPolyZ, g: MPolyZ, var: str) -> MPolyZ:
    """Resultant in ``var`` as the Bareiss determinant of the Sylvester matrix."""
    if f.degree_in(var) < 1 or g.degree_in(var) < 1:
        raise DegenerateInput(f"both polynomials must have positive degree in {var}")
    det = bareiss_det(sylvester_matrix(f, g, var))
    return MPolyZ.coerce(det)


def is_homogeneous_in(f: MPolyZ, vars_: tuple[str, ...]) -> int | None:
    """Common total degree in ``vars_``, or None if not homogeneous."""
    idx = [_index(v) for v in vars_]
    degs = {sum(e[i] for i in idx) for e in f.terms}
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def dehomogenize(f: MPolyZ, num: str, den: str, target: str) -> MPolyZ:
    """Set den := 1 and num := target in a form homogeneous in {num, den}."""
    if is_homogeneous_in(f, (num, den)) is None:
        raise NotHomogeneous(f"{f} is not homogeneous in {num}, {den}")
    i_num, i_den, i_t = _index(num), _index(den), _index(target)
    out: dict[tuple, int] = {}
    for e, v in f.terms.items():
        ne = list(e)
        k = ne[i_num]
        ne[i_num] = 0
        ne[i_den] = 0
        ne[i_t] += k
        ne = tuple(ne)
        out[ne] = out.get(ne, 0) + v
    return MPolyZ(out)


def content_strip(f: MPolyZ, vars_) -> tuple[MPolyZ, MPolyZ]:
    """Split off the largest monomial in ``vars_`` dividing every term."""
    if f.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    idx = [_index(v) for v in vars_]
    low = [min(e[i] for e in f.terms) for i in range(NVARS)]
    mono = [low[i] if i in idx else 0 for i in range(NVARS)]
    cof = {tuple(x - y for x, y in zip(e, mono)): v for e, v in f.terms.items()}
    return MPolyZ({tuple(mono): 1}), MPolyZ(cof)


def primitive_part(f: MPolyZ) -> tuple[int, MPolyZ]:
    """(signed content, primitive part with positive leading coefficient)."""
    if f.is_zero():
        raise ZeroPolynomial("primitive part of the zero polynomial")
    k = f.content()
    if f.leading_term()[1] < 0:
        k = -k
    return k, exact_div(f, MPolyZ.const(k))


def binomial_pair_det(f: MPolyZ, g: MPolyZ) -> int:
    """Determinant of the coefficient rows of two binomials on one support.

    >>> b, c = symbols("b c")
    >>> binomial_pair_det(98*b**3 + 729*c**2, 81*b**3 + 1000*c**2)
    38951
    """
    fs, gs = f.sorted_terms(), g.sorted_terms()
    if len(fs) != 2 or len(gs) != 2 or [e for e, _ in fs] != [e for e, _ in gs]:
        raise NotBinomialPair(f"{f} and {g} are not binomials over one support")
    return fs[0][1] * gs[1][1] - fs[1][1] * gs[0][1]


def reduce_mod(f: MPolyZ, p, bindings: Mapping[str, int | FpElem] | None = None):
    """Specialize mod p; an FpPoly if one variable stays free, else an FpElem."""
    modulus = as_modulus(p)
    q = modulus.p
    vals = [None] * NVARS
    for v, x in (bindings or {}).items():
        vals[_index(v)] = int(x) % q
    free = sorted({i for e in f.terms for i, k in enumerate(e) if k and vals[i] is None})
    if len(free) > 1:
        raise UnboundVariables(f"unbound variables {[VARS[i] for i in free]}")
    coeffs: dict[int, int] = {}
    for e, coef in f.terms.items():
        t = coef % q
        deg = 0
        for i, k in enumerate(e):
            if not k:
                continue
            if vals[i] is None:
                deg = k
            else:
                t = t * pow(vals[i], k, q) % q
        coeffs[deg] = (coeffs.get(deg, 0) + t) % q
    if not free:
        return FpElem(coeffs.get(0, 0), modulus)
    top = max(coeffs) if coeffs else 0
    return FpPoly(modulus, [coeffs.get(k, 0) for k in range(top + 1)])


def free_variable(f: MPolyZ, bound=()) -> str | None:
    """The single variable of ``f`` not listed in ``bound``, if any."""
    free = sorted(f.variables() - set(bound), key=_index)
    return free[0] if free else None

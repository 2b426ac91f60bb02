"""The normalized families X^n - a X^(n-1) + b X^(n-2) - c X^(n-3), n = 3, 4, 5."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import UnsupportedDegree
from .fp_poly import FpPoly
from .sym_poly import MPolyZ, hasse_symbolic, substitute, var

PARAMS = ("a", "b", "c")
ROOTS = ("x1", "x2", "x3")
SUPPORTED_DEGREES = (3, 4, 5)


@dataclass(frozen=True)
class NormalizedFamily:
    degree: int
    poly: MPolyZ
    params: tuple[str, ...]
    roots: tuple[str, ...]
    bindings: dict
    root_form: MPolyZ

    def hasse(self, i: int) -> MPolyZ:
        return hasse_symbolic(self.poly, i, "X")

    def param_level(self, param: str) -> int:
        """Index i of the Hasse derivative whose constant term is ``param``."""
        return self.degree - 1 - self.params.index(param)

    def level_param(self, i: int) -> str:
        return self.params[self.degree - 1 - i]

    def specialize(self, p, values) -> FpPoly:
        """Member of the family mod p for parameter values (a, b[, c])."""
        return FpPoly(p, family_coeffs(self.degree, values))


def family_coeffs(n: int, values) -> list[int]:
    """Ascending coefficients of X^n - a X^(n-1) + b X^(n-2) - ..."""
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k, v in enumerate(values, start=1):
        coeffs[n - k] = (-1) ** k * int(v)
    return coeffs


def elementary_symmetric(xs, k: int) -> MPolyZ:
    out = MPolyZ()
    for combo in combinations(xs, k):
        t = MPolyZ.const(1)
        for x in combo:
            t = t * x
        out = out + t
    return out


@lru_cache(maxsize=None)
def normalized_family(n: int) -> NormalizedFamily:
    if n not in SUPPORTED_DEGREES:
        raise UnsupportedDegree(f"degree {n} is not one of {SUPPORTED_DEGREES}")
    X = var("X")
    m = n - 2
    params = PARAMS[:m]
    roots = ROOTS[:m]
    P = X**n
    for k, q in enumerate(params, start=1):
        P = P + (-1) ** k * var(q) * X ** (n - k)
    xs = [var(x) for x in roots]
    root_form = X**2
    for x in xs:
        root_form = root_form * (X - x)
    bindings = {q: elementary_symmetric(xs, k) for k, q in enumerate(params, start=1)}
    if substitute(P, bindings) != root_form:
        raise AssertionError(f"symmetric-function identity fails in degree {n}")
    return NormalizedFamily(n, P, params, roots, bindings, root_form)

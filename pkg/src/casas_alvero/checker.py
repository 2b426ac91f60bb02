"""
Casas-Alvero hypothesis checks for a single polynomial over F_p.

A polynomial of degree n satisfies the hypotheses when it has a common
factor with each Hasse derivative P_1, ..., P_{n-1}. An identically zero
derivative counts as sharing every root of P.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import FpElem
from .errors import DegreeZero, IndexOutOfRange
from .fp_poly import FpPoly, gcd_monic, hasse_derivative, radical_charp, roots_in_fp


class Verdict(str, enum.Enum):
    MONOMIAL = "Monomial"
    COUNTEREXAMPLE = "Counterexample"
    NOT_CA = "NotCA"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DerivativeCheck:
    i: int
    gcd: FpPoly
    shared_fp_roots: frozenset[FpElem]
    derivative_is_zero: bool

    @property
    def shares_root(self) -> bool:
        return self.gcd.degree >= 1


@dataclass(frozen=True)
class CAVerdict:
    poly: FpPoly
    satisfies_ca: bool
    per_derivative: tuple[DerivativeCheck, ...]
    is_monomial: bool
    monomial_root: FpElem | None
    verdict: Verdict

    @property
    def failing_derivatives(self) -> list[int]:
        return [d.i for d in self.per_derivative if not d.shares_root]


def ca_check(P: FpPoly) -> CAVerdict:
    n = P.degree
    if n < 1:
        raise DegreeZero("Casas-Alvero check needs a polynomial of degree >= 1")
    checks = []
    for i in range(1, n):
        Pi = hasse_derivative(P, i)
        g = gcd_monic(P, Pi)
        roots = roots_in_fp(g) if g.degree >= 1 else set()
        checks.append(DerivativeCheck(i, g, frozenset(roots), Pi.is_zero()))
    satisfies = all(c.shares_root for c in checks)
    rad = radical_charp(P)
    is_monomial = rad.degree == 1
    root = FpElem(-rad.coeffs[0], P.modulus) if is_monomial else None
    if is_monomial:
        verdict = Verdict.MONOMIAL
    elif satisfies:
        verdict = Verdict.COUNTEREXAMPLE
    else:
        verdict = Verdict.NOT_CA
    return CAVerdict(P, satisfies, tuple(checks), is_monomial, root, verdict)


def satisfies_ca(P: FpPoly) -> bool:
    """Hypothesis test only, stopping at the first coprime derivative."""
    n = P.degree
    if n < 1:
        raise DegreeZero("Casas-Alvero check needs a polynomial of degree >= 1")
    return all(gcd_monic(P, hasse_derivative(P, i)).degree >= 1 for i in range(1, n))


def verify_shared_root(P: FpPoly, i: int, r) -> bool:
    """True iff r is a root of both P and its i-th Hasse derivative."""
    if not 1 <= i <= P.degree - 1:
        raise IndexOutOfRange(f"derivative index {i} outside 1..{P.degree - 1}")
    return P(r).value == 0 and hasse_derivative(P, i)(r).value == 0


def conjecture_verdict(P: FpPoly) -> Verdict:
    return ca_check(P).verdict

"""
Exhaustive searches for counterexamples in the normalized families mod p.

The naive search tests every parameter tuple with the checker. The pruned
degree-5 search uses the linear derivative P_4 to fix c from (a, b) when
a != 0, then tests the two resultants Res(P, P_2) and Res(P, P_3) on whole
blocks of parameters at once with numpy. Every hit of either search is
re-certified with the full checker.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .arith import PrimeModulus, is_prime
from .checker import CAVerdict, Verdict, ca_check
from .errors import BudgetExceeded, UnsupportedPrime
from .family import family_coeffs, normalized_family
from .fp_poly import FpPoly, gcd_monic, hasse_derivative

log = logging.getLogger(__name__)

NAIVE_BUDGET = 313**3
PRUNED_PRIME_LIMIT = 1 << 31
BLOCK_CELLS = 1 << 20


@dataclass(frozen=True)
class SearchHit:
    p: int
    degree: int
    params: tuple[int, ...]
    poly: FpPoly
    verdict: CAVerdict

    @property
    def a(self) -> int:
        return self.params[0]

    @property
    def b(self) -> int:
        return self.params[1]

    @property
    def c(self) -> int | None:
        return self.params[2] if len(self.params) > 2 else None


@dataclass(frozen=True)
class SearchPlan:
    degree: int
    primes: tuple[int, ...]
    mode: str = "pruned"
    threads: int = 1
    shards: int = 0

    @classmethod
    def for_range(cls, degree, pmin, pmax, **kw) -> SearchPlan:
        return cls(degree, tuple(q for q in range(max(pmin, 2), pmax + 1) if is_prime(q)), **kw)

    def mode_for(self, p: int) -> str:
        if self.mode == "naive" or self.degree != 5 or p in (2, 3, 5):
            return "naive"
        return "pruned"


def _hypotheses_hold(P: FpPoly) -> bool:
    # the linear derivative P_{n-1} fails most often, so test it first
    for i in range(P.degree - 1, 0, -1):
        if gcd_monic(P, hasse_derivative(P, i)).degree < 1:
            return False
    return True


def _certified(p: int, n: int, params) -> SearchHit | None:
    P = FpPoly(p, family_coeffs(n, params))
    v = ca_check(P)
    if v.verdict is not Verdict.COUNTEREXAMPLE:
        return None
    return SearchHit(p, n, tuple(params), P, v)


def search_naive(n: int, p: int, budget: int = NAIVE_BUDGET) -> list[SearchHit]:
    """Every counterexample X^n - aX^(n-1) + ... mod p, in lexicographic order."""
    normalized_family(n)
    p = PrimeModulus(p).p
    m = n - 2
    if p**m > budget:
        raise BudgetExceeded(f"{p}^{m} parameter tuples exceed the budget of {budget}")
    hits = []
    for params in product(range(p), repeat=m):
        P = FpPoly(p, family_coeffs(n, params))
        if not _hypotheses_hold(P):
            continue
        hit = _certified(p, n, params)
        if hit is not None:
            hits.append(hit)
    return hits


# ---- pruned degree-5 search ---------------------------------------------


@lru_cache(maxsize=None)
def _resultant_factors(i: int):
    """Res(P, P_i) split as a monomial in (a, b, c) times a cofactor, as term lists."""
    from .case_engine import family_resultants
    from .sym_poly import content_strip

    mono, cof = content_strip(family_resultants(5)[i], ("a", "b", "c"))
    (e,) = mono.terms
    return e[1:4], tuple((coef, e[1], e[2], e[3]) for e, coef in cof.terms.items())


def _powers(x: np.ndarray, k: int, p: int) -> list[np.ndarray]:
    out = [np.ones_like(x)]
    for _ in range(k):
        out.append(out[-1] * x % p)
    return out


def _eval_terms(terms, A, B, C, p: int) -> np.ndarray:
    # A, B, C broadcast against each other; powers are taken before broadcasting
    pa = _powers(A, max(t[1] for t in terms), p)
    pb = _powers(B, max(t[2] for t in terms), p)
    pc = _powers(C, max(t[3] for t in terms), p)
    acc = np.zeros(np.broadcast_shapes(A.shape, B.shape, C.shape), dtype=np.int64)
    for coef, ea, eb, ec in terms:
        t = pa[ea] * pb[eb] % p
        if ec:
            t = t * pc[ec] % p
        acc += (coef % p) * t % p
    return acc % p


def _vanishes(i: int, A, B, C, p):
    mono, terms = _resultant_factors(i)
    mask = _eval_terms(terms, A, B, C, p) == 0
    for x, k in zip((A, B, C), mono):
        if k:
            mask = mask | (x == 0)
    return mask


def _both_vanish(A, B, C, p):
    mask = _vanishes(2, A, B, C, p)
    if not mask.any():
        return mask
    return mask & _vanishes(3, A, B, C, p)


def _shard_nonzero_a(p: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    """Candidates with a in [lo, hi), a != 0; c is forced by P(a/5) = 0."""
    inv125 = pow(125, -1, p)
    rows = max(1, BLOCK_CELLS // p)
    b = np.arange(p, dtype=np.int64)[None, :]
    out = []
    for start in range(lo, hi, rows):
        a = np.arange(start, min(start + rows, hi), dtype=np.int64)[:, None]
        a3 = a * a % p * a % p
        c = ((25 * a % p) * b % p - 4 * a3) % p * inv125 % p
        mask = _both_vanish(a, b, c, p)
        for ia, ib in zip(*np.nonzero(mask)):
            out.append((start + int(ia), int(ib), int(c[ia, ib])))
    return out


def _shard_zero_a(p: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    """Candidates with a = 0 and b in [lo, hi); P_4 = 5X shares the root 0."""
    rows = max(1, BLOCK_CELLS // p)
    cvals = np.arange(p, dtype=np.int64)[None, :]
    out = []
    for start in range(lo, hi, rows):
        b = np.arange(start, min(start + rows, hi), dtype=np.int64)[:, None]
        mask = _both_vanish(np.zeros((1, 1), dtype=np.int64), b, cvals, p)
        for ib, ic in zip(*np.nonzero(mask)):
            bb, cc = start + int(ib), int(ic)
            if bb or cc:
                out.append((0, bb, cc))
    return out


def _ranges(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    k = max(1, min(k, hi - lo))
    step = -(-(hi - lo) // k)
    return [(s, min(s + step, hi)) for s in range(lo, hi, step)]


def search_pruned_deg5(p: int, threads: int = 1, shards: int = 0) -> list[SearchHit]:
    """All degree-5 counterexamples mod p for p outside {2, 3, 5}."""
    p = PrimeModulus(p).p
    if p in (2, 3, 5):
        raise UnsupportedPrime(f"pruned search needs p not in (2, 3, 5), got {p}")
    if p >= PRUNED_PRIME_LIMIT:
        raise UnsupportedPrime(f"pruned search uses int64 arithmetic and needs p < 2^31, got {p}")
    shards = shards or max(1, threads) * 4
    jobs = [(_shard_zero_a, lo, hi) for lo, hi in _ranges(0, p, shards)]
    jobs += [(_shard_nonzero_a, lo, hi) for lo, hi in _ranges(1, p, shards)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda j: j[0](p, j[1], j[2]), jobs))
    else:
        parts = [fn(p, lo, hi) for fn, lo, hi in jobs]
    candidates = sorted({t for part in parts for t in part})
    hits = []
    for params in candidates:
        hit = _certified(p, 5, params)
        if hit is None:
            raise RuntimeError(f"pruned search candidate {params} mod {p} fails the checker")
        hits.append(hit)
    return hits


def search_prime(n: int, p: int, mode: str = "pruned", threads: int = 1) -> list[SearchHit]:
    if SearchPlan(n, (p,), mode).mode_for(p) == "naive":
        return search_naive(n, p)
    return search_pruned_deg5(p, threads=threads)


def search_range(n: int, pmin: int, pmax: int, mode: str = "pruned", threads: int = 1) -> dict[int, list[SearchHit]]:
    """Hits for every prime in [pmin, pmax]; primes without hits map to []."""
    plan = SearchPlan.for_range(n, pmin, pmax, mode=mode, threads=threads)
    out = {}
    for p in plan.primes:
        out[p] = search_prime(n, p, plan.mode_for(p), threads)
        log.info("degree %d, p=%d: %d hits", n, p, len(out[p]))
    return out


def primes_with_hits(results: dict[int, list[SearchHit]]) -> list[int]:
    return sorted(p for p, hits in results.items() if hits)

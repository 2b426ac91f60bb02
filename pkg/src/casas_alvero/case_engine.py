"""
Mechanized case analysis of the normalized families in degrees 3, 4, 5.

Each branch reduces the Casas-Alvero hypotheses to an integer (the
eliminant) whose odd prime factors are the only characteristics in which
the branch can be realized. Every surviving candidate prime is then
certified by building an explicit counterexample mod p and running the
checker on it; a prime is reported bad only with such a witness.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .arith import Factorization, PrimeModulus, factor
from .checker import CAVerdict, Verdict, ca_check, verify_shared_root
from .errors import (
    NeedsManualAnalysis,
    NoSolutionModP,
    NotBinomialPair,
    NotExactDivision,
    NotHomogeneous,
    UnsupportedDegree,
)
from .family import NormalizedFamily, family_coeffs, normalized_family
from .fp_poly import FpPoly, from_roots, gcd_monic, roots_in_fp
from .sym_poly import (
    VARS,
    MPolyZ,
    binomial_pair_det,
    content_strip,
    dehomogenize,
    exact_div,
    is_homogeneous_in,
    primitive_part,
    reduce_mod,
    substitute,
    sylvester_resultant,
    var,
)

log = logging.getLogger(__name__)

# primes settled before the case analysis starts
EXCLUDED = {3: (2, 3), 4: (2, 3), 5: (2, 3, 5)}

TRANSFER_NOTE = (
    "a good prime p for degree {n} extends the conjecture to characteristic-0 "
    "degrees {n}*p^e; bad primes block only that transfer"
)

# Parameter choices used to realize the zero-parameter branches; the
# remaining free parameter is solved mod p.
PREFERRED_PARAMETERS = {
    (5, "a", 11): {"c": 1},
    (5, "a", 3541): {"b": -10, "c": 9},
    (5, "b", 599): {"a": -5, "c": 4},
    (5, "c", 7): {"a": 3, "b": 2},
}

ZERO_SUBCASE_SCAN_CAP = 1 << 20

ERRATUM_P11 = (
    "erratum (p=11): the displayed witness x^5 - 10x^3 - 3x^2 does not match its "
    "stated factorization x^2(x+1)(x+3)(x-4) mod 11, whose expansion "
    "X^5 - 2X^3 - X^2 is the verified counterexample"
)
ERRATUM_CHAR3 = (
    "erratum (p=3): X^5 + X^4 is coprime to its Hasse derivative P_4 over F_3, so it "
    "is not a counterexample under Hasse derivatives; X^5 - X^2 = X^2(X-1)^3, found "
    "by exhaustive search, is used as the witness instead"
)
NOTE_P5 = (
    "note (p=5): 5 is settled through the degree-5^e case and is therefore listed "
    "as KnownGood, not as a bad prime, although it is set aside before the analysis"
)


class CaseKind(str, enum.Enum):
    NONZERO = "NonzeroCase"
    ZERO = "ZeroSubcase"

    def __str__(self):
        return self.value


class ExclusionStatus(str, enum.Enum):
    KNOWN_BAD = "KnownBad"
    KNOWN_GOOD = "KnownGood"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class RootAssignment:
    """Roots shared with P_2, ..., P_{n-1}, in that order."""

    shared: tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.shared) + 2

    def root_for(self, i: int) -> str:
        return self.shared[i - 2]

    def canonical(self) -> RootAssignment:
        """Representative under the x2 <-> x3 relabeling (degree 5 only)."""
        if self.degree != 5:
            return self
        swap = {"x1": "x1", "x2": "x3", "x3": "x2"}
        other = RootAssignment(tuple(swap[x] for x in self.shared))
        return min(self, other, key=lambda a: a.shared[::-1])

    def __str__(self):
        return "(" + ",".join(self.shared) + ")"


@dataclass(frozen=True)
class Witness:
    p: int
    poly: FpPoly
    verdict: CAVerdict
    parameters: tuple[int, ...]
    r: int | None = None
    shared_roots: tuple[tuple[int, int], ...] = ()


@dataclass
class CaseResult:
    kind: CaseKind
    degree: int
    assignment: RootAssignment | None
    vanishing: str | None
    conditions: tuple[MPolyZ, ...]
    eliminant: int
    factorization: Factorization
    candidate_primes: tuple[int, ...]
    verified: list[Witness] = field(default_factory=list)
    impossible: bool = False
    forms: tuple[MPolyZ, ...] = ()
    relation: tuple[str, MPolyZ] | None = None
    degenerate: list[dict] = field(default_factory=list)
    dropped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.kind is CaseKind.NONZERO:
            return f"shared roots {self.assignment}"
        return f"{self.vanishing}=0"


@dataclass(frozen=True)
class Exclusion:
    p: int
    status: ExclusionStatus
    justification: str
    witness: FpPoly | None = None
    verdict: CAVerdict | None = None


@dataclass
class BadPrimeReport:
    degree: int
    excluded: list[Exclusion]
    cases: list[CaseResult]
    bad_primes: tuple[int, ...]
    transfer_note: str
    errata: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def witness_for(self, p: int) -> FpPoly:
        for ex in self.excluded:
            if ex.p == p and ex.witness is not None:
                return ex.witness
        for case in self.cases:
            for w in case.verified:
                if w.p == p:
                    return w.poly
        raise KeyError(p)


# ---- assignments ---------------------------------------------------------


def raw_assignments(n: int) -> list[RootAssignment]:
    """Every labeling with the P_{n-1} root fixed to x1."""
    fam = normalized_family(n)
    free = [fam.roots] * (n - 3)
    return [RootAssignment(tuple(t) + ("x1",)) for t in product(*free)]


def enumerate_assignments(n: int) -> list[RootAssignment]:
    if n not in (3, 4, 5):
        raise UnsupportedDegree(f"no case analysis for degree {n}")
    classes = {a.canonical() for a in raw_assignments(n)}
    return sorted(classes, key=lambda a: a.shared[::-1])


# ---- elimination pipeline -------------------------------------------------


def _solve_linear(expr: MPolyZ, v: str) -> MPolyZ:
    if expr.degree_in(v) != 1:
        raise NeedsManualAnalysis(f"{expr} is not linear in {v}")
    const, lin = expr.coeffs_in(v)
    if not lin.is_constant():
        raise NeedsManualAnalysis(f"coefficient of {v} in {expr} is not a constant")
    try:
        return exact_div(-const, lin)
    except NotExactDivision:
        raise NeedsManualAnalysis(f"cannot solve {expr} = 0 for {v} over Z") from None


def _eliminate(fam: NormalizedFamily, shared: dict, vanishing: str | None = None):
    """Conditions on the nonzero roots, keyed by parameter weight.

    For each Hasse derivative P_i (i = n-1 down to 2) the parameter in its
    constant term is solved from P_i(root) = 0 and equated with its
    symmetric-function value; weight-1 gives the linear relation used to
    eliminate the last root.
    """
    n = fam.degree
    solved: dict[str, MPolyZ] = {}
    conds: dict[int, MPolyZ] = {}
    for i in range(n - 1, 1, -1):
        q = fam.level_param(i)
        k = n - i
        if q == vanishing:
            q_expr = MPolyZ()
        else:
            root = shared[i]
            value = substitute(fam.hasse(i), {"X": var(root), **solved})
            q_expr = _solve_linear(value, q)
        solved[q] = q_expr
        cond = q_expr - fam.bindings[q]
        if k > 2 and q != vanishing:
            # root is nonzero: bring the condition down to a quadratic form
            try:
                cond = exact_div(cond, var(shared[i]) ** (k - 2))
            except NotExactDivision:
                raise NeedsManualAnalysis(f"{cond} is not divisible by {shared[i]}^{k - 2}") from None
        conds[k] = cond
    lin = conds.pop(1)
    if len(fam.roots) < 2:
        return {1: lin}, None
    last = fam.roots[-1]
    expr = _solve_linear(lin, last)
    return {k: substitute(c, {last: expr}) for k, c in sorted(conds.items())}, (last, expr)


def _normalize_sign(f: MPolyZ) -> MPolyZ:
    # make the term with the highest power of x1 positive
    k = VARS.index("x1")
    lead = max(f.terms.items(), key=lambda t: (t[0][k], t[0]))
    return -f if lead[1] < 0 else f


def _monomial_coefficient(f: MPolyZ, allowed: set[str]) -> int:
    if len(f.terms) != 1 or not f.variables() <= allowed:
        raise NeedsManualAnalysis(f"condition {f} is not a single monomial")
    return next(iter(f.terms.values()))


def _candidates(n: int, primes) -> tuple[int, ...]:
    return tuple(sorted({q for q in primes if q != 2 and q not in EXCLUDED[n]}))


def derive_nonzero_case(fam: NormalizedFamily, asg: RootAssignment, certify: bool = True) -> CaseResult:
    n = fam.degree
    if asg.degree != n:
        raise ValueError(f"assignment {asg} does not fit degree {n}")
    shared = {i: asg.root_for(i) for i in range(2, n)}
    conds, relation = _eliminate(fam, shared)
    forms = tuple(_normalize_sign(c) for c in conds.values())
    if n == 5:
        for f in forms:
            if is_homogeneous_in(f, ("x1", "x2")) != 2 or not f.variables() <= {"x1", "x2"}:
                raise NotHomogeneous(f"{f} is not a quadratic form in x1, x2")
        conditions = tuple(dehomogenize(f, "x2", "x1", "r") for f in forms)
        if any(f.degree_in("r") < 1 for f in conditions):
            raise NeedsManualAnalysis(f"degenerate quadratic in {asg}")
        eliminant = sylvester_resultant(conditions[0], conditions[1], "r").constant_value()
    else:
        conditions = forms
        eliminant = _monomial_coefficient(forms[0], {"x1"})
    if eliminant == 0:
        raise NeedsManualAnalysis(f"eliminant vanishes for {asg}")
    fz = factor(eliminant)
    case = CaseResult(
        kind=CaseKind.NONZERO,
        degree=n,
        assignment=asg,
        vanishing=None,
        conditions=conditions,
        eliminant=eliminant,
        factorization=fz,
        candidate_primes=_candidates(n, fz.primes),
        forms=forms,
        relation=relation,
    )
    return _certify(case, fam) if certify else case


@lru_cache(maxsize=None)
def family_resultants(n: int) -> dict[int, MPolyZ]:
    """Res_X(P, P_i) for i = 2..n-1 over the symbolic family."""
    fam = normalized_family(n)
    return {i: sylvester_resultant(fam.poly, fam.hasse(i), "X") for i in range(2, n)}


def _zero_subcase_deg5(fam: NormalizedFamily, q: str) -> CaseResult:
    res = family_resultants(5)
    level = fam.param_level(q)
    free = tuple(x for x in fam.params if x != q)
    specialized = [substitute(res[i], {q: 0}) for i in sorted(res) if i != level]
    conditions, degenerate, promoted = [], [], set()
    for R in specialized:
        mono, cof = content_strip(R, free)
        content, prim = primitive_part(cof)
        conditions.append(prim)
        if abs(content) != 1:
            fz = factor(content)
            promoted.update(fz.primes)
            degenerate.append({"branch": "integer content", "coefficient": content, "factors": fz})
    for u in free:
        remaining = [substitute(R, {u: 0}) for R in specialized]
        survivors = [R for R in remaining if not R.is_zero()]
        if not survivors:
            raise NeedsManualAnalysis(f"{q}=0 and {u}=0 leaves both conditions empty")
        for R in survivors:
            v = next(x for x in free if x != u)
            k = _monomial_coefficient(R, {v})
            fz = factor(k)
            promoted.update(fz.primes)
            degenerate.append({"branch": f"{u}=0", "coefficient": k, "factors": fz, "condition": R})
    try:
        det = binomial_pair_det(conditions[0], conditions[1])
    except NotBinomialPair as exc:
        raise NeedsManualAnalysis(str(exc), {"vanishing": q, "conditions": [str(c) for c in conditions]}) from None
    if det == 0:
        raise NeedsManualAnalysis(f"singular binomial system for {q}=0")
    fz = factor(det)
    return CaseResult(
        kind=CaseKind.ZERO,
        degree=5,
        assignment=None,
        vanishing=q,
        conditions=tuple(conditions),
        eliminant=det,
        factorization=fz,
        candidate_primes=_candidates(5, set(fz.primes) | promoted),
        degenerate=degenerate,
    )


def _zero_subcase_deg4(fam: NormalizedFamily, q: str) -> CaseResult:
    # the derivative with constant term q has root 0; the other one must
    # share a nonzero root, labeled x1, or P collapses to X^4
    level = fam.param_level(q)
    shared = {i: ("0" if i == level else "x1") for i in range(2, 4)}
    conds, relation = _eliminate(fam, shared, vanishing=q)
    forms = tuple(_normalize_sign(c) for c in conds.values())
    eliminant = _monomial_coefficient(forms[0], {"x1"})
    fz = factor(eliminant)
    return CaseResult(
        kind=CaseKind.ZERO,
        degree=4,
        assignment=None,
        vanishing=q,
        conditions=forms,
        eliminant=eliminant,
        factorization=fz,
        candidate_primes=_candidates(4, fz.primes),
        forms=forms,
        relation=relation,
    )


def derive_zero_subcases(fam: NormalizedFamily, certify: bool = True, preferred=None) -> list[CaseResult]:
    n = fam.degree
    if n not in (4, 5):
        raise UnsupportedDegree(f"zero subcases are defined for degrees 4 and 5, not {n}")
    build = _zero_subcase_deg5 if n == 5 else _zero_subcase_deg4
    cases = [build(fam, q) for q in fam.params]
    if certify:
        cases = [_certify(c, fam, preferred) for c in cases]
    return cases


# ---- counterexample construction ----------------------------------------


def _params_of(P: FpPoly, n: int) -> tuple[int, ...]:
    return tuple(((-1) ** k * P.coeffs[n - k]) % P.p for k in range(1, n - 1))


def _solve_r(case: CaseResult, modulus: PrimeModulus) -> int:
    p = modulus.p
    (c1, b1, a1), (c2, b2, a2) = ([f.coeffs_in("r")[j].constant_value() for j in range(3)] for f in case.conditions)
    den = (a1 * b2 - a2 * b1) % p
    if den:
        return (-(a1 * c2 - a2 * c1) * pow(den, -1, p)) % p
    f1, f2 = (reduce_mod(f, modulus) for f in case.conditions)
    g = gcd_monic(f1, f2)
    roots = sorted(x.value for x in roots_in_fp(g)) if g.degree >= 1 else []
    if not roots:
        raise NoSolutionModP(f"no common root mod {p} for {case.label}")
    return roots[0]


def _root_values(case: CaseResult, p: int) -> tuple[dict[str, int], int | None]:
    values = {"x1": 1}
    r = None
    if case.degree == 5:
        r = _solve_r(case, PrimeModulus(p))
        values["x2"] = r
    if case.relation is not None:
        last, expr = case.relation
        values[last] = expr.evaluate(values) % p
    for f in case.conditions:
        point = {"r": r} if case.degree == 5 else values
        if f.evaluate(point) % p:
            raise NoSolutionModP(f"condition {f} does not vanish mod {p}")
    return values, r


def _scan_zero_subcase(case: CaseResult, fam: NormalizedFamily, p: int, fixed=None) -> dict[str, int]:
    """Nonzero values of the two free parameters solving both conditions mod p."""
    modulus = PrimeModulus(p)
    free = [x for x in fam.params if x != case.vanishing]
    fixed = {k: v % p for k, v in (fixed or {}).items() if k in free}
    if any(v == 0 for v in fixed.values()):
        raise NoSolutionModP("fixed parameters must be nonzero")
    if len(fixed) == 2:
        if all(f.evaluate(fixed) % p == 0 for f in case.conditions):
            return fixed
        raise NoSolutionModP(f"fixed parameters {fixed} do not solve the {case.label} system mod {p}")
    if fixed:
        scan_var = None
        attempts = [dict(fixed)]
    else:
        scan_var = free[0]
        attempts = ({scan_var: u} for u in range(1, p))
    for binding in attempts:
        other = next(x for x in free if x not in binding)
        polys = [reduce_mod(f, modulus, binding) for f in case.conditions]
        nonzero = [f for f in polys if not f.is_zero()]
        if not nonzero:
            raise NeedsManualAnalysis(f"both conditions vanish at {binding} mod {p}")
        g = nonzero[0]
        for f in nonzero[1:]:
            g = gcd_monic(g, f)
        if g.degree < 1:
            continue
        roots = sorted(x.value for x in roots_in_fp(g) if x.value)
        if roots:
            return {**binding, other: roots[0]}
    raise NoSolutionModP(f"no nonzero solution of the {case.label} system mod {p}")


def construct_counterexample(case: CaseResult, p, fixed=None) -> Witness:
    """Realize ``case`` mod p and certify the result with the checker."""
    modulus = PrimeModulus(int(p))
    p = modulus.p
    if p not in case.candidate_primes:
        raise ValueError(f"{p} is not a candidate prime of {case.label}")
    fam = normalized_family(case.degree)
    n = case.degree
    r = None
    if case.kind is CaseKind.ZERO and n == 5:
        if p >= ZERO_SUBCASE_SCAN_CAP:
            raise NoSolutionModP(f"scan cap exceeded for p={p}")
        values = _scan_zero_subcase(case, fam, p, fixed)
        values[case.vanishing] = 0
        params = [values[q] for q in fam.params]
        P = FpPoly(modulus, family_coeffs(n, params))
        shared = []
        for i in range(2, n):
            Pi_roots = sorted(x.value for x in roots_in_fp(gcd_monic(P, P.hasse(i))))
            if Pi_roots:
                shared.append((i, Pi_roots[0]))
    else:
        values, r = _root_values(case, p)
        P = from_roots(modulus, [0, 0] + [values[x] for x in fam.roots])
        shared = []
        for i in range(2, n):
            if case.kind is CaseKind.NONZERO:
                root = values[case.assignment.root_for(i)]
            else:
                root = 0 if fam.level_param(i) == case.vanishing else values["x1"]
            if not verify_shared_root(P, i, root):
                raise NoSolutionModP(f"P_{i} does not vanish at {root} mod {p}")
            shared.append((i, root % p))
    verdict = ca_check(P)
    if verdict.verdict is not Verdict.COUNTEREXAMPLE:
        raise NoSolutionModP(f"constructed polynomial {P} is {verdict.verdict}")
    return Witness(p, P, verdict, _params_of(P, n), r, tuple(shared))


def _certify(case: CaseResult, fam: NormalizedFamily, preferred=None) -> CaseResult:
    preferred = PREFERRED_PARAMETERS if preferred is None else preferred
    kept = []
    for p in case.candidate_primes:
        fixed = preferred.get((case.degree, case.vanishing, p)) if case.kind is CaseKind.ZERO else None
        try:
            case.verified.append(construct_counterexample(case, p, fixed))
            kept.append(p)
        except NoSolutionModP as exc:
            log.warning("candidate %d of %s dropped: %s", p, case.label, exc)
            case.dropped.append((p, str(exc)))
    case.impossible = not kept
    return case


# ---- exclusions and the report --------------------------------------------


def _exclusions(n: int) -> tuple[list[Exclusion], list[str]]:
    from .search import search_naive

    def bad(p, desc, why):
        P = FpPoly.from_descending(p, desc)
        v = ca_check(P)
        if v.verdict is not Verdict.COUNTEREXAMPLE:
            raise AssertionError(f"exclusion witness {P} is {v.verdict}")
        return Exclusion(p, ExclusionStatus.KNOWN_BAD, why, P, v)

    def good(p):
        why = f"degree {n} = {p}^1: the conjecture holds for degrees {p}^e in characteristic 0"
        if n % p:
            why = f"degrees {p}^e are settled and {n}*{p}^e reduces to them"
        return Exclusion(p, ExclusionStatus.KNOWN_GOOD, why)

    errata = []
    if n == 3:
        out = [bad(2, [1, -1, 0, 0], "X^3 - X^2 is a counterexample in characteristic 2"), good(3)]
    elif n == 4:
        out = [
            Exclusion(2, ExclusionStatus.KNOWN_GOOD, "degree 4 = 2^2: the conjecture holds for degrees 2^e"),
            bad(3, [1, -1, 0, 0, 0], "X^4 - X^3 is a counterexample in characteristic 3"),
        ]
    else:
        hits = search_naive(5, 3)
        witness = hits[0].poly
        out = [
            bad(2, [1, -1, 0, 0, 0, 0], "X^5 - X^4 is a counterexample in characteristic 2"),
            bad(3, witness.descending(), f"{witness.format()} (exhaustive search over F_3) is a counterexample"),
            good(5),
        ]
        errata.append(ERRATUM_CHAR3)
    return out, errata


def bad_primes(n: int, preferred=None) -> BadPrimeReport:
    fam = normalized_family(n)
    excluded, errata = _exclusions(n)
    cases = [derive_nonzero_case(fam, a) for a in enumerate_assignments(n)]
    if n >= 4:
        cases += derive_zero_subcases(fam, preferred=preferred)
    bad = {e.p for e in excluded if e.status is ExclusionStatus.KNOWN_BAD}
    for case in cases:
        bad.update(w.p for w in case.verified)
    notes = []
    if n == 5:
        errata.append(ERRATUM_P11)
        notes.append(NOTE_P5)
    return BadPrimeReport(
        degree=n,
        excluded=excluded,
        cases=cases,
        bad_primes=tuple(sorted(bad)),
        transfer_note=TRANSFER_NOTE.format(n=n),
        errata=errata,
        notes=notes,
    )


def is_good_prime(n: int, p: int) -> bool:
    """Goodness over the algebraic closure, read off the mechanized analysis."""
    report = bad_primes(n)
    return p not in report.bad_primes

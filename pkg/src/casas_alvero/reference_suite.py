"""
Fixed suite of published counterexamples, each checked with ca_check and
explicit shared-root evaluations, plus two machine-checked errata.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .checker import CAVerdict, Verdict, ca_check, verify_shared_root
from .fp_poly import FpPoly, from_roots
from .parsing import parse_poly


@dataclass(frozen=True)
class SuiteItem:
    label: str
    poly: str
    p: int
    shared_roots: tuple[tuple[int, int], ...] = ()
    expected: Verdict = Verdict.COUNTEREXAMPLE


ITEMS = (
    SuiteItem("degree 3 mod 2", "x^3 - x^2", 2, ((1, 0), (2, 1))),
    SuiteItem("degree 4 mod 5", "x^4 - x^2", 5, ((1, 0), (3, 0), (2, 1))),
    SuiteItem("degree 4 mod 7", "x^4 - 4x^3 + 3x^2", 7, ((3, 1), (2, 3))),
    SuiteItem("mod 8009", "x^5 - 5x^4 - 3309x^3 + 3313x^2", 8009, ((4, 1), (3, 2113), (2, -2109))),
    SuiteItem("mod 193", "x^5 - 5x^4 + 10x^3 - 6x^2", 193, ((4, 1), (3, 1), (2, 161))),
    SuiteItem("mod 131", "x^5 - 5x^4 + 26x^3 - 22x^2", 131, ((4, 1), (3, 49), (2, 49))),
    SuiteItem("mod 11", "x^5 - 2x^3 - x^2", 11, ((2, -3), (3, -3), (4, 0))),
    SuiteItem("mod 3541", "x^5 - 10x^3 - 9x^2", 3541, ((2, 1567), (3, -1), (4, 0))),
    SuiteItem("mod 599", "x^5 + 5x^4 - 4x^2", 599, ((2, -269), (3, 0), (4, -1))),
    SuiteItem("mod 7", "x^5 - 3x^4 + 2x^3", 7, ((2, 0), (3, 1), (4, 2))),
    SuiteItem(
        "degree 6 mod 7390044713023799",
        "x^6 + 3 144 481 702 696 843x^4 + x^3 + 2 707 944 513 497 181x^2",
        7390044713023799,
    ),
)


@dataclass
class ItemResult:
    item: SuiteItem
    poly: FpPoly
    verdict: CAVerdict
    root_checks: list[tuple[int, int, bool]]
    seconds: float

    @property
    def passed(self) -> bool:
        return self.verdict.verdict is self.item.expected and all(ok for _, _, ok in self.root_checks)


@dataclass
class Erratum:
    key: str
    original: str
    replacement: str
    p: int
    confirmed: bool
    detail: str

    def __str__(self):
        return self.detail


# Shared-root lines printed next to these two witnesses repeat the pattern
# of the mod-8009 case; the checks above follow the case derivations.
ROOT_NOTES = (
    (193, ((3, 161), (2, -157)), "mod 193: shared roots follow assignment (x2,x1,x1): P_3(1) = 0, P_2(r) = 0"),
    (131, ((3, 49), (2, -45)), "mod 131: shared roots follow assignment (x2,x2,x1): P_3(r) = 0, P_2(r) = 0"),
)


@dataclass
class SuiteResult:
    items: list[ItemResult]
    errata: list[Erratum] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.items)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.items) and all(e.confirmed for e in self.errata)


def run_item(item: SuiteItem) -> ItemResult:
    t0 = time.perf_counter()
    P = parse_poly(item.poly).to_fp(item.p)
    verdict = ca_check(P)
    checks = [(i, r, verify_shared_root(P, i, r)) for i, r in item.shared_roots]
    return ItemResult(item, P, verdict, checks, time.perf_counter() - t0)


def _erratum_p11() -> Erratum:
    shown = parse_poly("x^5 - 10x^3 - 3x^2").to_fp(11)
    # x^2 (x + 1)(x + 3)(x - 4)
    expanded = from_roots(11, [0, 0, -1, -3, 4])
    fixed = parse_poly("x^5 - 2x^3 - x^2").to_fp(11)
    confirmed = (
        shown != expanded
        and expanded == fixed
        and ca_check(fixed).verdict is Verdict.COUNTEREXAMPLE
        and ca_check(shown).verdict is not Verdict.COUNTEREXAMPLE
    )
    detail = (
        "p=11: displayed witness x^5 - 10x^3 - 3x^2 is inconsistent with its factorization "
        f"x^2(x+1)(x+3)(x-4), which expands to {fixed.format(signed=True)} mod 11; "
        f"the displayed polynomial is {ca_check(shown).verdict} "
        f"(derivatives {ca_check(shown).failing_derivatives} coprime)"
    )
    return Erratum("p11-display", "x^5 - 10x^3 - 3x^2", fixed.format(signed=True), 11, confirmed, detail)


def _erratum_char3() -> Erratum:
    from .search import search_naive

    shown = parse_poly("x^5 + x^4").to_fp(3)
    v = ca_check(shown)
    hits = search_naive(5, 3)
    replacement = hits[0].poly if hits else None
    confirmed = v.verdict is not Verdict.COUNTEREXAMPLE and replacement is not None
    detail = (
        f"p=3: witness X^5 + X^4 fails under Hasse derivatives (P_i coprime for i in "
        f"{v.failing_derivatives}); search over F_3 gives the replacement "
        f"{replacement.format(signed=True) if replacement else 'none'}"
    )
    return Erratum(
        "char3-witness",
        "x^5 + x^4",
        replacement.format(signed=True) if replacement else "",
        3,
        confirmed,
        detail,
    )


def run_suite() -> SuiteResult:
    items = [run_item(item) for item in ITEMS]
    return SuiteResult(items, [_erratum_p11(), _erratum_char3()], _root_notes())


def _root_notes() -> list[str]:
    out = []
    for p, pairs, text in ROOT_NOTES:
        item = next(i for i in ITEMS if i.p == p)
        P = parse_poly(item.poly).to_fp(p)
        failing = [(i, r) for i, r in pairs if not verify_shared_root(P, i, r)]
        if failing:
            out.append(f"{text}; the pattern pairs {failing} of the mod-8009 case do not vanish here")
    return out

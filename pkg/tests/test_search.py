import pytest

from casas_alvero.case_engine import bad_primes
from casas_alvero.checker import Verdict, ca_check
from casas_alvero.errors import BudgetExceeded, UnsupportedPrime
from casas_alvero.family import family_coeffs
from casas_alvero.fp_poly import FpPoly
from casas_alvero.search import (
    SearchPlan,
    primes_with_hits,
    search_naive,
    search_pruned_deg5,
    search_range,
)


def fmt(hits):
    return [h.poly.format() for h in hits]


def test_naive_examples():
    assert (3, 2, 0) in [h.params for h in search_naive(5, 7)]
    assert "X^5 - 3X^4 + 2X^3" in fmt(search_naive(5, 7))
    assert search_naive(5, 13) == []
    assert (0, 4) in [h.params for h in search_naive(4, 5)]
    hits3 = search_naive(5, 3)
    assert hits3 and hits3[0].params == (0, 0, 1)
    assert hits3[0].poly.format() == "X^5 - X^2"


def test_naive_is_sorted_and_certified():
    hits = search_naive(5, 11)
    assert [h.params for h in hits] == sorted(h.params for h in hits)
    for h in hits:
        assert h.verdict.verdict is Verdict.COUNTEREXAMPLE
        assert h.poly == FpPoly(11, family_coeffs(5, h.params))


def test_naive_excludes_monomial():
    assert all(h.params != (0, 0, 0) for h in search_naive(5, 7))


def test_budget():
    with pytest.raises(BudgetExceeded):
        search_naive(5, 401)
    assert search_naive(3, 401) == []


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29, 31])
def test_pruned_matches_naive(p):
    naive = search_naive(5, p)
    pruned = search_pruned_deg5(p)
    assert [h.params for h in pruned] == [h.params for h in naive]
    assert [h.poly for h in pruned] == [h.poly for h in naive]


def test_pruned_examples():
    assert "X^5 - 5X^4 + 26X^3 - 22X^2" in fmt(search_pruned_deg5(131))
    assert search_pruned_deg5(17) == []
    assert "X^5 + 5X^4 - 4X^2" in fmt(search_pruned_deg5(599))
    for p in (2, 3, 5):
        with pytest.raises(UnsupportedPrime):
            search_pruned_deg5(p)


def test_pruned_hits_recertify():
    for h in search_pruned_deg5(193):
        assert ca_check(h.poly).verdict is Verdict.COUNTEREXAMPLE


def test_shard_independence():
    base = [h.params for h in search_pruned_deg5(131, shards=1)]
    for shards, threads in ((2, 1), (8, 1), (8, 4)):
        assert [h.params for h in search_pruned_deg5(131, threads=threads, shards=shards)] == base


def test_search_range_degree5():
    results = search_range(5, 7, 250)
    assert primes_with_hits(results) == [7, 11, 131, 193]
    assert all(p in results for p in (13, 17, 229, 241))


def test_search_range_low_degrees():
    assert primes_with_hits(search_range(4, 5, 50)) == [5, 7]
    assert primes_with_hits(search_range(3, 5, 50)) == []


def test_plan_modes():
    plan = SearchPlan.for_range(5, 2, 20)
    assert plan.primes == (2, 3, 5, 7, 11, 13, 17, 19)
    assert [plan.mode_for(p) for p in (2, 3, 5, 7)] == ["naive", "naive", "naive", "pruned"]
    assert SearchPlan(4, (7,)).mode_for(7) == "naive"
    assert SearchPlan(5, (7,), mode="naive").mode_for(7) == "naive"


def test_search_agrees_with_case_engine():
    bad = set(bad_primes(5).bad_primes)
    results = search_range(5, 2, 100)
    for p, hits in results.items():
        assert bool(hits) == (p in bad)

"""
The mechanized case analysis
============================

For each way the roots of P can be shared with P_2, P_3, P_4 the hypotheses
reduce to two quadratics in r = x2/x1. Their resultant is an integer, and only
its odd prime factors can host a counterexample. Each candidate is then
realized explicitly mod p and certified by the checker.
"""

from casas_alvero import bad_primes

for n in (3, 4, 5):
    report = bad_primes(n)
    print(f"\ndegree {n}")
    for ex in report.excluded:
        w = f"  witness {ex.witness.format()}" if ex.witness is not None else ""
        print(f"  p={ex.p} {ex.status}{w}")
    for case in report.cases:
        conds = "; ".join(str(f) for f in case.conditions)
        print(f"  {case.label:<22} {conds:<48} eliminant {case.eliminant} = {case.factorization}")
        for w in case.verified:
            extra = f"  (r = {w.r})" if w.r is not None else ""
            print(f"      p={w.p}: {w.poly.format()}{extra}")
    print("  bad primes:", report.bad_primes)
    for e in report.errata:
        print("  erratum:", e)

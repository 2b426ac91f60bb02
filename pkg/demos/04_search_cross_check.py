"""
Exhaustive search as an independent check
=========================================

The naive search runs the checker on every member of the family mod p. The
pruned degree-5 search fixes c from the linear derivative P_4 and tests the
two resultants over whole blocks of (a, b) with numpy. Both should find
counterexamples exactly at the bad primes.
"""

import time

from casas_alvero import search_naive, search_pruned_deg5, search_range
from casas_alvero.search import primes_with_hits

hits = search_naive(5, 7)
print("p=7 naive:", [h.poly.format() for h in hits][:4], "...", len(hits), "hits")

results = search_range(5, 2, 250)
print("degree 5, primes <= 250 with hits:", primes_with_hits(results))
print("degree 4, primes in [5, 50] with hits:", primes_with_hits(search_range(4, 5, 50)))

t0 = time.perf_counter()
hits = search_pruned_deg5(599, threads=4)
print(f"p=599: {len(hits)} hits in {time.perf_counter() - t0:.2f} s")
# hits come in orbits (a, b, c) -> (la, l^2 b, l^3 c) under X -> X/l
print("  contains X^5 + 5X^4 - 4X^2:", any(h.poly.format() == "X^5 + 5X^4 - 4X^2" for h in hits))

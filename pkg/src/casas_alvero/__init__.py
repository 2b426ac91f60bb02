"""Bad-prime determination for the Casas-Alvero conjecture in degrees 3, 4, 5."""

from .arith import FpElem, PrimeModulus, factor, fp_inv, is_prime
from .case_engine import (
    BadPrimeReport,
    CaseResult,
    bad_primes,
    construct_counterexample,
    derive_nonzero_case,
    derive_zero_subcases,
    enumerate_assignments,
)
from .checker import CAVerdict, Verdict, ca_check, satisfies_ca, verify_shared_root
from .family import normalized_family
from .fp_poly import FpPoly, from_roots, gcd_monic, hasse_derivative, radical_charp, resultant_fp, roots_in_fp
from .parsing import PolyExpr, parse_mpoly, parse_poly
from .search import SearchHit, search_naive, search_pruned_deg5, search_range
from .sym_poly import MPolyZ, bareiss_det, substitute, sylvester_resultant, symbols

__version__ = "0.1.0"

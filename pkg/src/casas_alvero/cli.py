"""
Command-line entry point: ``python -m casas_alvero <command> ...``.

Every command builds a ReportDocument. Text goes to stdout; ``--json PATH``
also writes the canonical JSON form (sorted keys, sorted prime lists,
integers beyond 64 bits as decimal strings).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .arith import PrimeModulus
from .case_engine import BadPrimeReport, CaseKind, bad_primes
from .checker import CAVerdict, ca_check
from .errors import BudgetExceeded, CasasAlveroError, NotPrime, ParseError
from .fp_poly import FpPoly, resultant_fp
from .parsing import parse_mpoly, parse_poly
from .reference_suite import run_suite
from .search import SearchHit, primes_with_hits, search_prime, search_range
from .sym_poly import hasse_symbolic, reduce_mod, sylvester_resultant

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_NOT_PRIME = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5

_INT64 = 1 << 63


@dataclass
class ReportDocument:
    command: str
    payload: dict
    errata: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "command": self.command, **self.payload, "errata": list(self.errata)}

    def to_json(self) -> str:
        return json.dumps(_jsonable(self.to_dict()), sort_keys=True, indent=2) + "\n"

    def text(self) -> str:
        return "\n".join(self.lines + [f"erratum: {e}" for e in self.errata]) + "\n"


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= _INT64 else x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _fmt(P: FpPoly, signed: bool) -> str:
    return P.format(signed=signed)


def _residue(x: int, p: int, signed: bool) -> int:
    x %= p
    return x - p if signed and x > p // 2 else x


# ---- check / hasse / resultant -------------------------------------------


def verdict_payload(v: CAVerdict, signed: bool = False) -> dict:
    p = v.poly.p
    return {
        "poly": _fmt(v.poly, signed),
        "p": p,
        "degree": v.poly.degree,
        "verdict": str(v.verdict),
        "satisfies_ca": v.satisfies_ca,
        "is_monomial": v.is_monomial,
        "monomial_root": None if v.monomial_root is None else _residue(v.monomial_root.value, p, signed),
        "derivatives": [
            {
                "i": d.i,
                "gcd": _fmt(d.gcd, signed),
                "shared_roots": sorted(_residue(r.value, p, signed) for r in d.shared_fp_roots),
                "derivative_is_zero": d.derivative_is_zero,
            }
            for d in v.per_derivative
        ],
    }


def run_check(poly: str, p: int, signed: bool = False) -> ReportDocument:
    modulus = PrimeModulus(p)
    P = parse_poly(poly).to_fp(modulus)
    v = ca_check(P)
    payload = verdict_payload(v, signed)
    lines = [f"{payload['poly']} mod {p}: {v.verdict}"]
    for d in payload["derivatives"]:
        zero = " (identically zero)" if d["derivative_is_zero"] else ""
        lines.append(f"  gcd(P, P_{d['i']}) = {d['gcd']}{zero}; shared roots in F_p: {d['shared_roots']}")
    return ReportDocument("check", {"check": payload}, lines=lines)


def run_hasse(poly: str, order: int, p: int | None = None, signed: bool = False) -> ReportDocument:
    e = parse_poly(poly)
    if p is None:
        out = hasse_symbolic(e.to_mpoly(), order, "X")
        text = str(out)
    else:
        out = e.to_fp(PrimeModulus(p)).hasse(order)
        text = _fmt(out, signed)
    payload = {"hasse": {"poly": poly, "order": order, "p": p, "result": text}}
    return ReportDocument("hasse", payload, lines=[text])


def run_resultant(f: str, g: str, var: str = "x", p: int | None = None) -> ReportDocument:
    name = "X" if var == "x" else var
    F, G = parse_mpoly(f), parse_mpoly(g)
    if p is None:
        R = sylvester_resultant(F, G, name)
        value = R.constant_value() if R.is_constant() else str(R)
    else:
        modulus = PrimeModulus(p)
        value = resultant_fp(reduce_mod(F, modulus), reduce_mod(G, modulus)).value
    payload = {"resultant": {"f": f, "g": g, "var": var, "p": p, "value": value}}
    return ReportDocument("resultant", payload, lines=[str(value)])


# ---- bad primes ----------------------------------------------------------


def _case_payload(case, signed: bool) -> dict:
    d = {
        "kind": str(case.kind),
        "conditions": [str(c) for c in case.conditions],
        "eliminant": str(case.eliminant),
        "factors": [[q, k] for q, k in case.factorization.factors],
        "candidates": list(case.candidate_primes),
        "verified": [{"p": w.p, "poly": _fmt(w.poly, signed)} for w in sorted(case.verified, key=lambda w: w.p)],
        "impossible": case.impossible,
    }
    if case.kind is CaseKind.NONZERO:
        d["assignment"] = str(case.assignment)
    else:
        d["vanishing"] = case.vanishing
    return d


def bad_prime_payload(report: BadPrimeReport, signed: bool = False) -> dict:
    excluded = []
    for ex in sorted(report.excluded, key=lambda e: e.p):
        item = {"p": ex.p, "status": str(ex.status), "note": ex.justification}
        if ex.witness is not None:
            item["witness"] = _fmt(ex.witness, signed)
        excluded.append(item)
    return {
        "degree": report.degree,
        "excluded": excluded,
        "cases": [_case_payload(c, signed) for c in report.cases],
        "bad_primes": sorted(report.bad_primes),
        "notes": [report.transfer_note] + list(report.notes),
    }


def run_bad_primes(n: int, signed: bool = False) -> ReportDocument:
    report = bad_primes(n)
    payload = bad_prime_payload(report, signed)
    lines = [f"degree {n}"]
    for ex in payload["excluded"]:
        w = f" [{ex['witness']}]" if "witness" in ex else ""
        lines.append(f"  excluded p={ex['p']}: {ex['status']}{w}")
    for c, case in zip(payload["cases"], report.cases):
        lines.append(f"  case {case.label}: eliminant {c['eliminant']} = {case.factorization}")
        lines.append(f"    conditions: {'; '.join(c['conditions'])}")
        if c["impossible"]:
            lines.append("    impossible for every admissible prime")
        for w in c["verified"]:
            lines.append(f"    p={w['p']}: {w['poly']}")
    lines.append(f"bad primes: {payload['bad_primes']}")
    lines.extend(f"note: {x}" for x in payload["notes"])
    return ReportDocument("bad-primes", payload, errata=list(report.errata), lines=lines)


# ---- search --------------------------------------------------------------


def _hit_payload(h: SearchHit, signed: bool) -> dict:
    d = {"p": h.p, "a": h.a, "b": h.b, "poly": _fmt(h.poly, signed)}
    if h.c is not None:
        d["c"] = h.c
    return d


def run_search(n: int, p: int, naive: bool = False, threads: int = 1, signed: bool = False) -> ReportDocument:
    p = PrimeModulus(p).p
    hits = search_prime(n, p, "naive" if naive else "pruned", threads)
    payload = {"degree": n, "hits": [_hit_payload(h, signed) for h in hits]}
    lines = [f"degree {n}, p={p}: {len(hits)} hits"]
    lines += [f"  {h['poly']}" for h in payload["hits"][:20]]
    if len(hits) > 20:
        lines.append(f"  ... {len(hits) - 20} more")
    return ReportDocument("search", payload, lines=lines)


def run_search_range(n, pmin, pmax, naive=False, threads=1, signed=False) -> ReportDocument:
    results = search_range(n, pmin, pmax, "naive" if naive else "pruned", threads)
    hits = [_hit_payload(h, signed) for p in sorted(results) for h in results[p]]
    counts = {str(p): len(results[p]) for p in sorted(results)}
    payload = {"degree": n, "hits": hits, "counts": counts, "primes_with_hits": primes_with_hits(results)}
    lines = [f"degree {n}, primes in [{pmin}, {pmax}]"]
    lines += [f"  p={p}: {len(results[p])} hits" for p in sorted(results) if results[p]]
    lines.append(f"primes with hits: {payload['primes_with_hits']}")
    return ReportDocument("search-range", payload, lines=lines)


# ---- verification suite ----------------------------------------------------


def run_verify_paper(signed: bool = False) -> ReportDocument:
    suite = run_suite()
    items = []
    lines = []
    for r in suite.items:
        items.append(
            {
                "label": r.item.label,
                "p": r.item.p,
                "poly": _fmt(r.poly, signed),
                "expected": str(r.item.expected),
                "verdict": str(r.verdict.verdict),
                "shared_roots": [{"i": i, "r": x, "ok": ok} for i, x, ok in r.root_checks],
                "passed": r.passed,
            }
        )
        status = "PASS" if r.passed else "FAIL"
        roots = ", ".join(f"P_{i}({x})=0" + ("" if ok else " FAILED") for i, x, ok in r.root_checks)
        lines.append(f"{status} {r.item.label}: {_fmt(r.poly, signed)} -> {r.verdict.verdict}" + (f"; {roots}" if roots else ""))
    lines.append(f"{suite.passed}/{len(suite.items)} items passed, {len(suite.errata)} errata")
    lines.extend(f"note: {x}" for x in suite.notes)
    payload = {
        "items": items,
        "passed": suite.passed,
        "total": len(suite.items),
        "notes": suite.notes,
        "errata_detail": [
            {"key": e.key, "p": e.p, "original": e.original, "replacement": e.replacement, "confirmed": e.confirmed}
            for e in suite.errata
        ],
    }
    code = EXIT_OK if suite.ok else EXIT_VERIFY
    return ReportDocument("verify-paper", payload, errata=[str(e) for e in suite.errata], lines=lines, exit_code=code)


# ---- argument handling -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="casas-alvero", description=__doc__.strip().splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the canonical JSON report to PATH")
    common.add_argument("--signed", action="store_true", help="print residues in (-p/2, p/2]")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="run the Casas-Alvero checker on one polynomial")
    s.add_argument("--poly", "-P", required=True)
    s.add_argument("--mod", "-m", type=int, required=True)

    s = sub.add_parser("hasse", parents=[common], help="i-th Hasse derivative")
    s.add_argument("--poly", "-P", required=True)
    s.add_argument("--order", "-i", type=int, required=True)
    s.add_argument("--mod", "-m", type=int)

    s = sub.add_parser("resultant", parents=[common], help="Sylvester resultant over Z, or over F_p with --mod")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--var", default="x")
    s.add_argument("--mod", "-m", type=int)

    s = sub.add_parser("bad-primes", parents=[common], help="mechanized bad-prime analysis")
    s.add_argument("--degree", "-d", type=int, choices=(3, 4, 5), required=True)

    threads = os.cpu_count() or 1
    s = sub.add_parser("search", parents=[common], help="exhaustive counterexample search for one prime")
    s.add_argument("--degree", "-d", type=int, choices=(3, 4, 5), required=True)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--naive", action="store_true")
    s.add_argument("--threads", type=int, default=threads)

    s = sub.add_parser("search-range", parents=[common], help="exhaustive search over a prime range")
    s.add_argument("--degree", "-d", type=int, choices=(3, 4, 5), required=True)
    s.add_argument("--min", type=int, default=2)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--naive", action="store_true")
    s.add_argument("--threads", type=int, default=threads)

    sub.add_parser("verify-paper", parents=[common], help="check every published witness and errata")
    return ap


def dispatch(args) -> ReportDocument:
    c = args.command
    if c == "check":
        return run_check(args.poly, args.mod, args.signed)
    if c == "hasse":
        return run_hasse(args.poly, args.order, args.mod, args.signed)
    if c == "resultant":
        return run_resultant(args.f, args.g, args.var, args.mod)
    if c == "bad-primes":
        return run_bad_primes(args.degree, args.signed)
    if c == "search":
        return run_search(args.degree, args.prime, args.naive, args.threads, args.signed)
    if c == "search-range":
        return run_search_range(args.degree, args.min, args.max, args.naive, args.threads, args.signed)
    return run_verify_paper(args.signed)


_VALUE_FLAGS = {"--poly", "-P", "--f", "--g"}


def _glue_values(argv):
    # polynomial arguments may start with '-', which argparse reads as a flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        doc = dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotPrime as exc:
        print(f"not prime: {exc}", file=sys.stderr)
        return EXIT_NOT_PRIME
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CasasAlveroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(doc.text())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(doc.to_json())
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())

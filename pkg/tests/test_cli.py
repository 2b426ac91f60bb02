import json
import subprocess
import sys

import pytest

from casas_alvero.cli import (
    EXIT_BUDGET,
    EXIT_NOT_PRIME,
    EXIT_PARSE,
    main,
    run_bad_primes,
    run_check,
    run_verify_paper,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def test_check(capsys, tmp_path):
    path = tmp_path / "check.json"
    code, out, _ = run(capsys, "check", "--poly", "x^5 - 3x^4 + 2x^3", "--mod", "7", "--json", str(path))
    assert code == 0
    assert "Counterexample" in out
    doc = read_json(path)
    assert doc["command"] == "check"
    assert doc["schema_version"] == 1
    assert doc["check"]["verdict"] == "Counterexample"
    assert [d["shared_roots"] for d in doc["check"]["derivatives"]] == [[0], [0], [1], [2]]
    assert doc["errata"] == []


def test_check_monomial_and_big_modulus():
    assert run_check("x^5", 7).payload["check"]["verdict"] == "Monomial"
    doc = run_check("x^6 + 3144481702696843x^4 + x^3 + 2707944513497181x^2", 7390044713023799)
    assert doc.payload["check"]["verdict"] == "Counterexample"


def test_signed_output():
    doc = run_check("x^5 - 3x^4 + 2x^3", 7, signed=True)
    assert doc.payload["check"]["poly"] == "X^5 - 3X^4 + 2X^3"
    doc = run_check("x^5 - 3x^4 + 2x^3", 7)
    assert doc.payload["check"]["poly"] == "X^5 + 4X^4 + 2X^3"


def test_exit_codes(capsys):
    assert run(capsys, "check", "-P", "x^", "-m", "7")[0] == EXIT_PARSE
    code, _, err = run(capsys, "check", "-P", "x^2", "-m", "8")
    assert code == EXIT_NOT_PRIME and "8" in err
    assert run(capsys, "search", "-d", "5", "--prime", "401", "--naive")[0] == EXIT_BUDGET


def test_hasse_and_resultant(capsys):
    assert run(capsys, "hasse", "--poly", "x^5", "--order", "5")[1].strip() == "1"
    assert run(capsys, "hasse", "--poly", "x^5 - x^4", "--order", "3", "--mod", "2")[1].strip() == "0"
    code, out, _ = run(capsys, "resultant", "--f", "9r^2-16r+4", "--g", "-20r^2+9r+40", "--var", "r")
    assert code == 0 and out.strip() == "32036"
    out = run(capsys, "resultant", "--f", "9r^2-16r+4", "--g", "-20r^2+9r+40", "--var", "r", "--mod", "7")[1]
    assert out.strip() == "4"


def test_resultant_symbolic(capsys):
    out = run(capsys, "resultant", "--f", "x^5 - ax^4 + bx^3 - cx^2", "--g", "5x - a")[1]
    assert out.strip() == "4*a^5 - 25*a^3*b + 125*a^2*c"


@pytest.mark.parametrize("n, expected", [(3, [2]), (4, [3, 5, 7]), (5, [2, 3, 7, 11, 131, 193, 599, 3541, 8009])])
def test_bad_primes_json(capsys, tmp_path, n, expected):
    path = tmp_path / "bad.json"
    code, out, _ = run(capsys, "bad-primes", "--degree", str(n), "--json", str(path))
    assert code == 0
    doc = read_json(path)
    assert doc["bad_primes"] == expected
    assert doc["degree"] == n
    for case in doc["cases"]:
        assert set(case) >= {"kind", "conditions", "eliminant", "factors", "candidates", "verified", "impossible"}
        assert isinstance(case["eliminant"], str)
    assert f"bad primes: {expected}" in out


def test_bad_primes_case_content():
    doc = run_bad_primes(5, signed=True).to_dict()
    by_key = {c.get("assignment") or c.get("vanishing"): c for c in doc["cases"]}
    assert by_key["(x3,x2,x1)"]["eliminant"] == "32036"
    assert by_key["(x3,x2,x1)"]["factors"] == [[2, 2], [8009, 1]]
    assert by_key["(x3,x2,x1)"]["verified"] == [{"p": 8009, "poly": "X^5 - 5X^4 - 3309X^3 + 3313X^2"}]
    assert by_key["a"]["conditions"] == ["98*b^3 + 729*c^2", "81*b^3 + 1000*c^2"]
    assert by_key["(x1,x1,x1)"]["impossible"] is True
    excluded = {e["p"]: e for e in doc["excluded"]}
    assert excluded[3]["witness"] == "X^5 - X^2"
    assert "witness" not in excluded[5]
    assert len(doc["errata"]) == 2


def test_search_commands(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, out, _ = run(capsys, "search", "-d", "5", "--prime", "131", "--threads", "2", "--signed", "--json", str(path))
    assert code == 0
    hits = read_json(path)["hits"]
    assert {"p": 131, "a": 5, "b": 26, "c": 22, "poly": "X^5 - 5X^4 + 26X^3 - 22X^2"} in hits
    path2 = tmp_path / "r.json"
    run(capsys, "search-range", "-d", "4", "--min", "5", "--max", "50", "--json", str(path2))
    assert read_json(path2)["primes_with_hits"] == [5, 7]


def test_canonical_bytes_across_threads(tmp_path, capsys):
    paths = []
    for threads in ("1", "4"):
        p = tmp_path / f"t{threads}.json"
        run(capsys, "search", "-d", "5", "--prime", "193", "--threads", threads, "--json", str(p))
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]
    a = run_bad_primes(5).to_json()
    assert a == run_bad_primes(5).to_json()


def test_verify_paper(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify-paper", "--json", str(path))
    assert code == 0
    doc = read_json(path)
    assert (doc["passed"], doc["total"]) == (11, 11)
    assert len(doc["errata"]) == 2
    item = next(i for i in doc["items"] if i["label"] == "mod 8009")
    assert [(s["i"], s["r"]) for s in item["shared_roots"]] == [(4, 1), (3, 2113), (2, -2109)]
    big = next(i for i in doc["items"] if i["p"] == 7390044713023799)
    assert big["verdict"] == "Counterexample"
    char3 = next(e for e in doc["errata_detail"] if e["p"] == 3)
    assert char3["original"] == "x^5 + x^4" and char3["replacement"] == "X^5 - X^2"
    assert "11/11 items passed, 2 errata" in out


def test_big_integers_serialized_as_strings():
    doc = run_verify_paper()
    text = doc.to_json()
    assert '"p": "7390044713023799"' not in text  # below 2^63 stays numeric
    from casas_alvero.cli import _jsonable

    assert _jsonable({"v": 1 << 70}) == {"v": str(1 << 70)}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "casas_alvero", "check", "-P", "x^3 - x^2", "-m", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "Counterexample" in proc.stdout

"""
Text parsing for polynomials written the way they appear in print, e.g.
``x^5 - 5x^4 - 3309x^3 + 3313x^2`` or ``3 144 481 702 696 843x^4``.

Grammar (whitespace is ignored everywhere)::

    poly := sign? term (('+' | '-') term)*
    term := coeff? ('*'? var ('^' uint)?)*
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .fp_poly import FpPoly
from .sym_poly import VARS, MPolyZ


@dataclass(frozen=True)
class PolyExpr:
    """Univariate integer polynomial; ``coeffs`` lowest degree first."""

    var: str
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs)) or [0]

    def to_fp(self, p) -> FpPoly:
        return FpPoly(p, self.coeffs)

    def to_mpoly(self) -> MPolyZ:
        name = "X" if self.var == "x" else self.var
        return MPolyZ.from_coeffs(self.coeffs, name)

    def format(self) -> str:
        return format_poly(self)

    def __str__(self):
        return format_poly(self)


def format_poly(e: PolyExpr) -> str:
    if not e.coeffs:
        return "0"
    parts = []
    for k in range(e.degree, -1, -1):
        v = e.coeffs[k]
        if not v:
            continue
        mono = "" if k == 0 else (e.var if k == 1 else f"{e.var}^{k}")
        mag = abs(v)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        if not parts:
            parts.append(("-" if v < 0 else "") + body)
        else:
            parts.append(("- " if v < 0 else "+ ") + body)
    return " ".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.chars = []
        self.offsets = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch)
                self.offsets.append(i)
        self.end = len(text)
        self.pos = 0

    def peek(self) -> str:
        return self.chars[self.pos] if self.pos < len(self.chars) else ""

    def startswith(self, s: str) -> bool:
        return "".join(self.chars[self.pos:self.pos + len(s)]) == s

    def offset(self) -> int:
        return self.offsets[self.pos] if self.pos < len(self.chars) else self.end

    def error(self, message: str):
        raise ParseError(message, self.offset())

    def uint(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an unsigned integer")
        return int("".join(self.chars[start:self.pos]))


def _parse_terms(text: str, read_var):
    """Yield (coefficient, {var: exponent}) for every term of ``text``."""
    s = _Scanner(text)
    if not s.chars:
        s.error("empty polynomial")
    terms = []
    sign = 1
    if s.peek() in "+-":
        sign = -1 if s.peek() == "-" else 1
        s.pos += 1
    while True:
        coef = None
        powers: dict[str, int] = {}
        if s.peek().isdigit():
            coef = s.uint()
        while True:
            save = s.pos
            if s.peek() == "*":
                if coef is None and not powers:
                    s.error("unexpected '*'")
                s.pos += 1
            name = read_var(s)
            if name is None:
                if s.pos != save:
                    s.error("expected a variable after '*'")
                break
            exp = 1
            if s.peek() == "^":
                s.pos += 1
                exp = s.uint()
            powers[name] = powers.get(name, 0) + exp
        if coef is None and not powers:
            s.error("expected a term")
        terms.append((sign * (1 if coef is None else coef), powers))
        if s.pos == len(s.chars):
            return terms
        if s.peek() not in "+-":
            s.error(f"unexpected character {s.peek()!r}")
        sign = -1 if s.peek() == "-" else 1
        s.pos += 1


def _read_letter(s: _Scanner):
    ch = s.peek()
    if ch.isalpha():
        s.pos += 1
        return ch
    return None


def parse_poly(text: str) -> PolyExpr:
    """Parse a univariate polynomial in a single-letter variable.

    >>> parse_poly("x^5 - 5x^4 - 3309x^3 + 3313x^2").descending()
    [1, -5, -3309, 3313, 0, 0]
    """
    terms = _parse_terms(text, _read_letter)
    names = {v for _, pw in terms for v in pw}
    if len(names) > 1:
        raise ParseError(f"more than one variable: {sorted(names)}", 0)
    var = names.pop() if names else "x"
    coeffs: dict[int, int] = {}
    for coef, pw in terms:
        k = pw.get(var, 0)
        coeffs[k] = coeffs.get(k, 0) + coef
    top = max(coeffs)
    return PolyExpr(var, tuple(coeffs.get(k, 0) for k in range(top + 1)))


_NAMES = sorted(VARS + ("x",), key=len, reverse=True)


def _read_symbol(s: _Scanner):
    for name in _NAMES:
        if s.startswith(name):
            s.pos += len(name)
            return "X" if name == "x" else name
    if s.peek().isalpha():
        s.error(f"unknown variable starting with {s.peek()!r}")
    return None


def parse_mpoly(text: str) -> MPolyZ:
    """Parse a polynomial over the fixed alphabet; ``x`` is read as ``X``.

    >>> str(parse_mpoly("98b^3 + 729c^2"))
    '98*b^3 + 729*c^2'
    """
    out = MPolyZ()
    for coef, pw in _parse_terms(text, _read_symbol):
        t = MPolyZ.const(coef)
        for name, k in pw.items():
            t = t * MPolyZ.var(name) ** k
        out = out + t
    return out

"""Hilbert polynomials, Macaulay decomposition and Gotzmann numbers."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Tuple


class InadmissibleError(ValueError):
    """The polynomial is not the Hilbert polynomial of a subscheme of P^n."""


class PolynomialSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.pos = pos


# --- dense univariate polynomials in t, coefficient lists low degree first ---

def _trim(c: List[Fraction]) -> List[Fraction]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _sub(a, b):
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return _trim([Fraction(x) - y for x, y in zip(a, b)])


def _add(a, b):
    return _sub(a, [-x for x in b])


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def evaluate(c, t):
    v = Fraction(0)
    for x in reversed(c):
        v = v * t + x
    return v


def binomial_poly(shift: int, a: int) -> List[Fraction]:
    """Coefficients of ``binom(t + shift, a)`` as a polynomial in ``t``."""
    out = [Fraction(1)]
    for j in range(a):
        out = _mul(out, [Fraction(shift - j), Fraction(1)])
    return [x / factorial(a) for x in out]


def eventually_nonnegative(c) -> bool:
    c = _trim(c)
    return not c or c[-1] > 0


@dataclass
class HilbertPolynomial:
    """``P(t) = sum c_i t^i`` plus its Macaulay data once decomposed."""

    coefficients: Tuple[Fraction, ...]
    macaulay: Optional[Tuple[int, ...]] = None
    text: str = field(default="", compare=False)

    @property
    def gotzmann(self) -> int:
        if self.macaulay is None:
            raise ValueError("Macaulay decomposition not computed")
        return len(self.macaulay)

    def __call__(self, t: int) -> int:
        v = evaluate(self.coefficients, t)
        if v.denominator != 1:
            raise ValueError(f"P({t}) = {v} is not an integer")
        return v.numerator

    def __str__(self):
        return self.text or format_polynomial(self.coefficients)


def format_polynomial(c) -> str:
    c = _trim(c)
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if x == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(x)
        body = (str(mag) if (mag != 1 or not mono) else "") + mono
        sign = "-" if x < 0 else "+"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f"{sign}{body}"
    return s


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>t)|(?P<op>[-+*^])|(?P<bad>\S))")


def parse_hilbert_polynomial(text: str) -> HilbertPolynomial:
    """Parse an integer polynomial in ``t`` such as ``"2t+2"`` or ``"2*t + 2"``."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group("bad") is not None:
            ch = m.group("bad")
            msg = "non-integer coefficient" if ch in "./" else f"unexpected character {ch!r}"
            raise PolynomialSyntaxError(msg, text, m.start("bad"))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", text, 0)

    coeffs: dict = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    first = True
    while i < len(tokens):
        sign = 1
        kind, val, at = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolynomialSyntaxError("expected '+' or '-'", text, at)
        first = False
        kind, val, at = peek()
        c, e = 1, 0
        if kind == "num":
            c = int(val)
            i += 1
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, at = peek()
                if kind != "var":
                    raise PolynomialSyntaxError("expected 't' after '*'", text, at)
            if kind == "var":
                e = 1
                i += 1
        elif kind == "var":
            e = 1
            i += 1
        else:
            raise PolynomialSyntaxError("expected a term", text, at)
        if e:
            kind, val, at = peek()
            if kind == "op" and val == "^":
                i += 1
                kind, val, at = peek()
                if kind != "num":
                    raise PolynomialSyntaxError("expected an exponent", text, at)
                e = int(val)
                i += 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    deg = max(coeffs)
    c = tuple(_trim([Fraction(coeffs.get(k, 0)) for k in range(deg + 1)]))
    return HilbertPolynomial(c, text=text.strip())


def macaulay_decomposition(P: HilbertPolynomial) -> Tuple[Tuple[int, ...], int]:
    """Greedy Gotzmann representation ``P(t) = sum_i binom(t + a_i - i + 1, a_i)``."""
    rem = _trim(P.coefficients)
    if not rem:
        raise InadmissibleError("the zero polynomial is not admissible")
    a: List[int] = []
    prev = None
    i = 0
    while rem:
        i += 1
        d = len(rem) - 1
        if rem[-1] < 0 or (prev is not None and d > prev):
            raise InadmissibleError(f"{format_polynomial(P.coefficients)} is not a Hilbert polynomial of a subscheme of projective space")
        # any a_i < deg(rem) would leave the leading term unreachable for all later steps
        nxt = _sub(rem, binomial_poly(d - i + 1, d))
        if not eventually_nonnegative(nxt):
            raise InadmissibleError(f"{format_polynomial(P.coefficients)} is not a Hilbert polynomial of a subscheme of projective space")
        a.append(d)
        prev = d
        rem = nxt
    total: List[Fraction] = []
    for idx, ai in enumerate(a, start=1):
        total = _add(total, binomial_poly(ai - idx + 1, ai))
    if total != _trim(P.coefficients):
        raise AssertionError("Macaulay identity failed to round-trip")
    return tuple(a), len(a)


def decomposed(P: HilbertPolynomial) -> HilbertPolynomial:
    a, _ = macaulay_decomposition(P)
    return HilbertPolynomial(P.coefficients, a, P.text)


def from_macaulay(a) -> HilbertPolynomial:
    """Build ``P`` from a weakly decreasing sequence (inverse of the decomposition)."""
    total: List[Fraction] = []
    for idx, ai in enumerate(a, start=1):
        total = _add(total, binomial_poly(ai - idx + 1, ai))
    return HilbertPolynomial(tuple(total), tuple(a))


@dataclass(frozen=True)
class ChartCounts:
    n: int
    r: int
    corners_target: int
    expansion_target: int
    delta_r_size: int
    delta_r1_size: int


def chart_counts(P: HilbertPolynomial, n: int) -> ChartCounts:
    if n < 1:
        raise ValueError("n must be at least 1")
    if P.macaulay is None:
        P = decomposed(P)
    r = P.gotzmann
    pr, pr1 = P(r), P(r + 1)
    cc = ChartCounts(
        n=n,
        r=r,
        corners_target=comb(n + r, r) - pr,
        expansion_target=comb(n + r + 1, r + 1) - pr1,
        delta_r_size=pr,
        delta_r1_size=pr1,
    )
    if min(cc.corners_target, cc.expansion_target, pr, pr1) < 0:
        raise InadmissibleError(f"P = {P} is inadmissible in P^{n}")
    return cc

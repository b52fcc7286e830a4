"""Exact sparse polynomials over the rationals.

Two flavours are used throughout the package:

* :class:`XPolynomial` lives in the ambient ring ``k[x_0, ..., x_n]``; terms are
  keyed by exponent tuples.
* :class:`TPolynomial` lives in the coordinate ring of a Groebner stratum; terms
  are keyed by sorted tuples of variable labels (a multiset), so ``T1^2*T4`` is
  stored under ``(1, 1, 4)``.

Coefficients are ``int`` or :class:`fractions.Fraction`. Integral fractions are
collapsed to ``int`` so that equal polynomials have identical term maps.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Hashable, Iterable, Mapping, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]


def normalize(c):
    """Return ``c`` as an exact rational, collapsing integral values to ``int``."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, _RationalABC):
        return normalize(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def degree(e: Exponent) -> int:
    return sum(e)


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def unit(n_vars: int, i: int) -> Exponent:
    return tuple(1 if j == i else 0 for j in range(n_vars))


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomials_of_degree(n_vars: int, d: int):
    """All exponent vectors of length ``n_vars`` and total degree ``d``."""
    if n_vars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, d - first):
            out.append((first,) + rest)
    return out


def format_monomial(e: Exponent, names) -> str:
    """Render ``x^2yz`` style when all names are single letters, else ``x0^2*x1``."""
    compact = all(len(s) == 1 for s in names)
    parts = []
    for name, k in zip(names, e):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{name}^{k}")
    if not parts:
        return "1"
    return "".join(parts) if compact else "*".join(parts)


def _format_coeff_term(c, body: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = -c if c < 0 else c
    if body == "1":
        mag = str(a)
    elif a == 1:
        mag = body
    else:
        mag = f"{a}*{body}"
    if first:
        return mag if sign == "+" else f"-{mag}"
    return f" {sign} {mag}"


class XPolynomial:
    """Polynomial in the x-variables with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: Dict[Exponent, object] = {}
        if terms:
            n = None
            for e, c in terms.items():
                e = tuple(e)
                if n is None:
                    n = len(e)
                elif len(e) != n:
                    raise ValueError("exponents of different lengths in one polynomial")
                c = normalize(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, e: Exponent, c=1) -> "XPolynomial":
        return cls({e: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return XPolynomial(out)

    def __neg__(self):
        return XPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, XPolynomial):
            c = normalize(other)
            return XPolynomial({e: v * c for e, v in self.terms.items()})
        out: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add_exponents(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return XPolynomial(out)

    __rmul__ = __mul__

    def is_homogeneous(self) -> bool:
        return len({degree(e) for e in self.terms}) <= 1

    def to_string(self, names, key=None) -> str:
        if not self.terms:
            return "0"
        exps = sorted(self.terms, key=key, reverse=True) if key else sorted(self.terms, reverse=True)
        return "".join(
            _format_coeff_term(self.terms[e], format_monomial(e, names), i == 0)
            for i, e in enumerate(exps)
        )

    def __repr__(self):
        names = [f"x{i}" for i in range(len(next(iter(self.terms))))] if self.terms else []
        return f"XPolynomial({self.to_string(names)})"


class Special(enum.Enum):
    """Non-integer results of :func:`TPolynomial.weighted_degree`."""

    ZERO = "zero"
    INHOMOGENEOUS = "inhomogeneous"


ZERO = Special.ZERO
INHOMOGENEOUS = Special.INHOMOGENEOUS


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def iadd_product(out: dict, p: Mapping, q: Mapping, scale=1) -> None:
    """In place ``out += scale * p * q`` on raw term maps, dropping zeros."""
    for k1, c1 in p.items():
        c1 = c1 * scale
        for k2, c2 in q.items():
            k = _merge(k1, k2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                del out[k]


class TPolynomial:
    """Polynomial in the stratum coordinates ``T_{alpha,beta}``.

    Variables are arbitrary mutually comparable hashable labels; the stratum
    code uses ``int`` indices, tests often use strings.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None, _trusted: bool = False):
        if _trusted:
            self.terms = terms
            return
        clean: Dict[tuple, object] = {}
        if terms:
            for k, c in terms.items():
                k = tuple(sorted(k))
                c = normalize(c)
                if c:
                    clean[k] = normalize(clean.get(k, 0) + c)
                    if not clean[k]:
                        del clean[k]
        self.terms = clean

    @classmethod
    def const(cls, c) -> "TPolynomial":
        return cls({(): c})

    @classmethod
    def var(cls, v: Hashable, c=1) -> "TPolynomial":
        return cls({(v,): c})

    @classmethod
    def _raw(cls, terms: dict) -> "TPolynomial":
        return cls({k: normalize(c) for k, c in terms.items() if c}, _trusted=True)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): normalize(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "TPolynomial":
        if isinstance(other, TPolynomial):
            return other
        return TPolynomial.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TPolynomial({k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TPolynomial):
            c = normalize(other)
            if not c:
                return TPolynomial()
            return TPolynomial._raw({k: v * c for k, v in self.terms.items()})
        out: dict = {}
        iadd_product(out, self.terms, other.terms)
        return TPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = TPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def variables(self) -> set:
        return {v for k in self.terms for v in k}

    def total_degree(self) -> int:
        return max((len(k) for k in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((), 0)

    def linear_part(self) -> dict:
        """Coefficients of the degree-one terms, keyed by variable."""
        return {k[0]: c for k, c in self.terms.items() if len(k) == 1}

    def weighted_degree(self, weights: Mapping):
        """Common weighted degree of all terms, :data:`ZERO` or :data:`INHOMOGENEOUS`."""
        if not self.terms:
            return ZERO
        degs = set()
        for k in self.terms:
            try:
                degs.add(sum(weights[v] for v in k))
            except KeyError as exc:
                raise ValueError(f"no weight for variable {exc.args[0]!r}") from None
        return degs.pop() if len(degs) == 1 else INHOMOGENEOUS

    def substitute(self, v: Hashable, g: "TPolynomial") -> "TPolynomial":
        """Replace every occurrence of ``v`` by ``g``."""
        return TPolynomial._raw(substitute_terms(self.terms, v, g.terms))

    def evaluate(self, point: Mapping):
        total = 0
        for k, c in self.terms.items():
            for v in k:
                c = c * point[v]
            total += c
        return normalize(total)

    def to_string(self, name=str) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-len(k), k))
        out = []
        for i, k in enumerate(keys):
            body = _format_tmonomial(k, name)
            out.append(_format_coeff_term(self.terms[k], body, i == 0))
        return "".join(out)

    def __repr__(self):
        return f"TPolynomial({self.to_string()})"


def _format_tmonomial(k: tuple, name) -> str:
    if not k:
        return "1"
    parts = []
    i = 0
    while i < len(k):
        j = i
        while j < len(k) and k[j] == k[i]:
            j += 1
        parts.append(name(k[i]) if j - i == 1 else f"{name(k[i])}^{j - i}")
        i = j
    return "*".join(parts)


def substitute_terms(terms: Mapping[tuple, object], v, g: Mapping[tuple, object]) -> dict:
    """Raw-map version of :meth:`TPolynomial.substitute`."""
    out: dict = {}
    powers = {0: {(): 1}}
    for k, c in terms.items():
        e = k.count(v)
        if e == 0:
            val = out.get(k, 0) + c
            if val:
                out[k] = val
            else:
                out.pop(k, None)
            continue
        if e not in powers:
            top = max(powers)
            cur = powers[top]
            for p in range(top + 1, e + 1):
                nxt: dict = {}
                iadd_product(nxt, cur, g)
                powers[p] = cur = nxt
        rest = tuple(x for x in k if x != v)
        iadd_product(out, {rest: c}, powers[e])
    return out


def expand_collect(factors: Iterable[Iterable[Tuple[object, tuple]]]) -> dict:
    """Multiply out a product of sums given as ``[(coeff, monomial), ...]`` lists.

    Deliberately naive; used as an independent check on substitution.
    """
    acc = [(1, ())]
    for fac in factors:
        acc = [(c1 * c2, tuple(sorted(m1 + m2))) for c1, m1 in acc for c2, m2 in fac]
    out: dict = {}
    for c, m in acc:
        out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def rank(rows: Iterable[Mapping[Hashable, object]]) -> int:
    """Rank over Q of sparse row vectors by fraction-exact Gaussian elimination."""
    pivots: Dict[Hashable, dict] = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                r += 1
                break
            prow = pivots[col]
            f = row[col] / prow[col]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r

"""Monomial orders on graded slices and weight vectors that realize them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Tuple

from .algebra import Exponent, degree, monomials_of_degree

LESS, EQUAL, GREATER = -1, 0, 1
KINDS = ("lex", "degrevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``degrevlex`` with a variable precedence.

    ``precedence[0]`` is the index of the largest variable; the default is
    ``x_0 > x_1 > ... > x_n``.
    """

    kind: str
    precedence: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unsupported monomial order {self.kind!r}; choose from {', '.join(KINDS)}")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence {self.precedence} is not a permutation")

    @classmethod
    def make(cls, kind: str, n: int, precedence: Sequence[int] | None = None) -> "MonomialOrder":
        return cls(kind, tuple(precedence) if precedence is not None else tuple(range(n + 1)))

    @property
    def n_vars(self) -> int:
        return len(self.precedence)

    def key(self, e: Exponent) -> tuple:
        """Sort key: larger key means larger monomial (degree compared first)."""
        p = self.precedence
        if self.kind == "lex":
            return (degree(e),) + tuple(e[i] for i in p)
        return (degree(e),) + tuple(-e[i] for i in reversed(p))

    def compare(self, a: Exponent, b: Exponent) -> int:
        if len(a) != len(b) or len(a) != self.n_vars:
            raise ValueError("exponent length does not match the order")
        if degree(a) != degree(b):
            raise ValueError(f"degree mismatch: {degree(a)} vs {degree(b)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, exps, descending: bool = False):
        return sorted(exps, key=self.key, reverse=descending)

    def describe(self, names) -> str:
        return f"{self.kind} ({'>'.join(names[i] for i in self.precedence)})"


def compare(order: MonomialOrder, a: Exponent, b: Exponent) -> int:
    return order.compare(a, b)


@dataclass(frozen=True)
class WeightVector:
    omega: Tuple[int, ...]

    def dot(self, e: Exponent) -> int:
        return sum(w * x for w, x in zip(self.omega, e))


def check_weight(order: MonomialOrder, omega: Sequence[int], degrees) -> bool:
    """Exhaustive check that ``omega`` strictly realizes ``order`` on each degree slice."""
    if any(w <= 0 for w in omega):
        return False
    for d in degrees:
        # on a slice, consecutive elements in order suffice for strictness
        ranked = order.sorted(monomials_of_degree(order.n_vars, d))
        vals = [sum(w * x for w, x in zip(omega, e)) for e in ranked]
        if any(lo >= hi for lo, hi in zip(vals, vals[1:])):
            return False
    return True


def check_weight_pairs(order: MonomialOrder, omega: Sequence[int], degrees) -> bool:
    """Same as :func:`check_weight` but literally over every pair (slow, for tests)."""
    w = WeightVector(tuple(omega))
    for d in degrees:
        for a, b in combinations(monomials_of_degree(order.n_vars, d), 2):
            c = order.compare(a, b)
            if c == GREATER and not w.dot(a) > w.dot(b):
                return False
            if c == LESS and not w.dot(a) < w.dot(b):
                return False
    return True


def _seed(order: MonomialOrder, base: int) -> Tuple[int, ...]:
    n = order.n_vars - 1
    omega = [0] * order.n_vars
    for pos, var in enumerate(order.precedence):
        if order.kind == "lex":
            omega[var] = base ** (n - pos)
        else:
            # position 0 gets the top weight; later positions lose base**(pos-1)
            omega[var] = base ** max(n - 1, 0) + 1 - (base ** (pos - 1) if pos else 0)
    return tuple(omega)


def realize_weight(order: MonomialOrder, n: int, r: int, max_retries: int = 8) -> WeightVector:
    """Positive weights strictly compatible with ``order`` on degrees ``r`` and ``r + 1``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if order.n_vars != n + 1:
        raise ValueError("order has the wrong number of variables")
    base = r + 2
    for _ in range(max_retries):
        omega = _seed(order, base)
        if check_weight(order, omega, (r, r + 1)):
            return WeightVector(omega)
        base *= 2
    raise RuntimeError(f"could not realize {order.kind} by a weight vector for n={n}, r={r}")


def parse_precedence(text: str, names: Sequence[str]) -> Tuple[int, ...]:
    """Parse ``"x>y>z>w"`` into a permutation of variable indices."""
    parts = [p.strip() for p in text.split(">")]
    index = {s: i for i, s in enumerate(names)}
    try:
        perm = tuple(index[p] for p in parts)
    except KeyError as exc:
        raise ValueError(f"unknown variable {exc.args[0]!r} in precedence {text!r}") from None
    if sorted(perm) != list(range(len(names))):
        raise ValueError(f"precedence {text!r} must list each of {', '.join(names)} exactly once")
    return perm

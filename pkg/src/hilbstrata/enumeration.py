"""Enumeration of the monomial ideals in M_{P,n}.

An ideal in M_{P,n} is generated in the Gotzmann degree ``r``, so it is
determined by its set of degree-``r`` generators (corners). A subset ``C`` of
the degree-``r`` monomials is admissible exactly when it has the right size and
its multiples by the variables have the right size in degree ``r + 1``; the
ideal's standard set in degree ``r`` is then the complement of ``C``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .algebra import Exponent, add_exponents, format_monomial, monomials_of_degree, unit
from .hilbert import HilbertPolynomial, chart_counts
from .orders import MonomialOrder


def default_names(n: int) -> Tuple[str, ...]:
    if n == 1:
        return ("x", "y")
    if n == 2:
        return ("x", "y", "z")
    if n == 3:
        return ("x", "y", "z", "w")
    return tuple(f"x{i}" for i in range(n + 1))


@dataclass(frozen=True)
class CornerSet:
    n: int
    r: int
    corners: Tuple[Exponent, ...]
    delta_r: Tuple[Exponent, ...]

    @classmethod
    def from_corners(cls, corners, n: int, r: int) -> "CornerSet":
        corners = set(corners)
        if any(sum(c) != r or len(c) != n + 1 for c in corners):
            raise ValueError(f"all generators must be monomials of degree {r} in {n + 1} variables")
        delta = [e for e in monomials_of_degree(n + 1, r) if e not in corners]
        return cls(n, r, tuple(sorted(corners)), tuple(sorted(delta)))

    def expansion(self) -> frozenset:
        return frozenset(expansion(self.corners, self.n))

    def generators(self, order: MonomialOrder) -> List[Exponent]:
        return order.sorted(self.corners)

    def key(self, order: MonomialOrder, names: Sequence[str] | None = None) -> str:
        return ideal_key(self.corners, order, names or default_names(self.n))


def ideal_key(corners, order: MonomialOrder, names: Sequence[str]) -> str:
    """Generators sorted ascending in ``order`` and rendered with ``names``."""
    return ", ".join(format_monomial(e, names) for e in order.sorted(corners))


def expansion(corners, n: int) -> set:
    return {add_exponents(c, unit(n + 1, i)) for c in corners for i in range(n + 1)}


def _masks(n: int, r: int):
    slice_r = monomials_of_degree(n + 1, r)
    index_r1 = {e: i for i, e in enumerate(monomials_of_degree(n + 1, r + 1))}
    masks = []
    for e in slice_r:
        m = 0
        for i in range(n + 1):
            m |= 1 << index_r1[add_exponents(e, unit(n + 1, i))]
        masks.append(m)
    return slice_r, masks


def _search(masks, k: int, target: int, start: int, chosen: list, mask: int, out: list):
    need = k - len(chosen)
    if need == 0:
        if bin(mask).count("1") == target:
            out.append(tuple(chosen))
        return
    for j in range(start, len(masks) - need + 1):
        m = mask | masks[j]
        # expansion only grows as corners are added
        if bin(m).count("1") > target:
            continue
        chosen.append(j)
        _search(masks, k, target, j + 1, chosen, m, out)
        chosen.pop()


def enumerate_corner_indices(n: int, r: int, k: int, target: int):
    slice_r, masks = _masks(n, r)
    out: list = []
    if k == 0:
        return slice_r, ([()] if target == 0 else [])
    _search(masks, k, target, 0, [], 0, out)
    return slice_r, out


def enumerate_M(P: HilbertPolynomial, n: int, order: MonomialOrder | None = None,
                names: Sequence[str] | None = None) -> List[CornerSet]:
    """All of M_{P,n}, sorted by canonical key (lex key if no order is given).

    The order only affects the sort of the output, never membership.
    """
    cc = chart_counts(P, n)
    slice_r, found = enumerate_corner_indices(n, cc.r, cc.corners_target, cc.expansion_target)
    result = [CornerSet.from_corners([slice_r[j] for j in idx], n, cc.r) for idx in found]
    order = order or MonomialOrder.make("lex", n)
    names = names or default_names(n)
    result.sort(key=lambda cs: cs.key(order, names))
    return result


def brute_force_M(P: HilbertPolynomial, n: int) -> set:
    """Filter every subset of the right size; only for small slices."""
    cc = chart_counts(P, n)
    slice_r = monomials_of_degree(n + 1, cc.r)
    return {
        frozenset(c)
        for c in combinations(slice_r, cc.corners_target)
        if len(expansion(c, n)) == cc.expansion_target
    }

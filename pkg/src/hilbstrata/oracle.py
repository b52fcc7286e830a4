"""A small homogeneous Buchberger engine over Q, used to cross-check strata."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Set

from .algebra import Exponent, XPolynomial, degree, divides, normalize
from .orders import MonomialOrder


class DegreeCapWarning(UserWarning):
    """S-pairs above the degree cap were discarded."""


@dataclass
class IdealPresentation:
    generators: List[XPolynomial]
    order: MonomialOrder

    def __post_init__(self):
        if any(not g for g in self.generators):
            raise ValueError("generators must be nonzero")
        if any(not g.is_homogeneous() for g in self.generators):
            raise ValueError("only homogeneous generators are supported")


@dataclass
class GroebnerBasis:
    polys: List[XPolynomial]
    order: MonomialOrder
    cap: int
    discarded_pairs: int = 0
    leading: List[Exponent] = field(default_factory=list)


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Engine:
    def __init__(self, order: MonomialOrder):
        self.key = order.key

    def lm(self, f: Dict[Exponent, object]) -> Exponent:
        return max(f, key=self.key)

    def monic(self, f):
        c = f[self.lm(f)]
        return {e: normalize(Fraction(v) / c) for e, v in f.items()}

    def reduce(self, f: Dict[Exponent, object], basis: Sequence[dict], leads: Sequence[Exponent]) -> dict:
        """Full reduction of ``f``; basis elements must be monic."""
        f = dict(f)
        rem: Dict[Exponent, object] = {}
        while f:
            m = max(f, key=self.key)
            c = f.pop(m)
            for g, lg in zip(basis, leads):
                if divides(lg, m):
                    q = tuple(x - y for x, y in zip(m, lg))
                    for e, v in g.items():
                        if e == lg:
                            continue
                        t = tuple(x + y for x, y in zip(e, q))
                        nv = f.get(t, 0) - c * v
                        if nv:
                            f[t] = nv
                        else:
                            f.pop(t, None)
                    break
            else:
                rem[m] = c
        return rem

    def spoly(self, f, lf, g, lg):
        l = _lcm(lf, lg)
        qf = tuple(x - y for x, y in zip(l, lf))
        qg = tuple(x - y for x, y in zip(l, lg))
        out: Dict[Exponent, object] = {}
        for e, v in f.items():
            t = tuple(x + y for x, y in zip(e, qf))
            out[t] = out.get(t, 0) + v
        for e, v in g.items():
            t = tuple(x + y for x, y in zip(e, qg))
            nv = out.get(t, 0) - v
            if nv:
                out[t] = nv
            else:
                out.pop(t, None)
        return {e: v for e, v in out.items() if v}


def buchberger(ideal: IdealPresentation, degree_cap: int, warn: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis, correct in all degrees up to ``degree_cap``.

    S-pairs are processed smallest lcm degree first; pairs whose lcm lies
    above the cap are dropped and counted in ``discarded_pairs``.
    """
    if degree_cap < max(degree(next(iter(g.terms))) for g in ideal.generators):
        raise ValueError("degree_cap below the largest generator degree")
    eng = _Engine(ideal.order)
    basis: List[dict] = []
    leads: List[Exponent] = []
    pairs: Set[tuple] = set()
    discarded = 0

    def add(h):
        nonlocal discarded
        h = eng.monic(h)
        lh = eng.lm(h)
        k = len(basis)
        basis.append(h)
        leads.append(lh)
        for i in range(k):
            l = _lcm(leads[i], lh)
            if sum(l) > degree_cap:
                discarded += 1
                continue
            # coprime leading monomials: S-polynomial reduces to zero
            if all(a == 0 or b == 0 for a, b in zip(leads[i], lh)):
                continue
            pairs.add((sum(l), eng.key(l), i, k))

    for g in sorted(ideal.generators, key=lambda g: eng.key(eng.lm(g.terms))):
        h = eng.reduce(g.terms, [b for b in basis], leads)
        if h:
            add(h)

    while pairs:
        p = min(pairs)
        pairs.discard(p)
        _, _, i, j = p
        s = eng.spoly(basis[i], leads[i], basis[j], leads[j])
        h = eng.reduce(s, basis, leads)
        if h:
            add(h)

    if warn and discarded:
        warnings.warn(f"{discarded} S-pairs above degree {degree_cap} discarded", DegreeCapWarning, stacklevel=2)

    # minimal basis, then inter-reduce tails
    keep = [i for i, li in enumerate(leads)
            if not any(j != i and divides(leads[j], li) and (leads[j] != li or j < i) for j in range(len(leads)))]
    mb = [basis[i] for i in keep]
    ml = [leads[i] for i in keep]
    reduced = []
    for i, (g, lg) in enumerate(zip(mb, ml)):
        others = [h for j, h in enumerate(mb) if j != i]
        olead = [h for j, h in enumerate(ml) if j != i]
        tail = {e: v for e, v in g.items() if e != lg}
        red = eng.reduce(tail, others, olead)
        red[lg] = 1
        reduced.append(red)
    order_idx = sorted(range(len(reduced)), key=lambda i: eng.key(ml[i]))
    polys = [XPolynomial(reduced[i]) for i in order_idx]
    return GroebnerBasis(polys, ideal.order, degree_cap, discarded, [ml[i] for i in order_idx])


def initial_ideal(ideal: IdealPresentation, degree_cap: int) -> Set[Exponent]:
    """Minimal generators of the initial ideal up to ``degree_cap``."""
    return set(buchberger(ideal, degree_cap, warn=False).leading)


def satisfies_criterion(gb: GroebnerBasis) -> bool:
    """Every S-polynomial within the cap reduces to zero."""
    eng = _Engine(gb.order)
    basis = [dict(p.terms) for p in gb.polys]
    leads = list(gb.leading)
    for i, j in combinations(range(len(basis)), 2):
        if sum(_lcm(leads[i], leads[j])) > gb.cap:
            continue
        if eng.reduce(eng.spoly(basis[i], leads[i], basis[j], leads[j]), basis, leads):
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    for p, lp in zip(gb.polys, gb.leading):
        if p.terms.get(lp) != 1:
            return False
        for e in p.terms:
            for q, lq in zip(gb.polys, gb.leading):
                if q is p:
                    continue
                if divides(lq, e):
                    return False
    return True

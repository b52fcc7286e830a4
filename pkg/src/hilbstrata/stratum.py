"""Groebner strata of monomial ideals in M_{P,n}.

For ``J`` with corners ``C`` and degree-``r`` standard monomials ``Delta_r`` the
generic reduced basis is ``g_a = x^a - sum_{b in Delta_r, b < a} T_{a,b} x^b``.
The stratum is cut out by asking that the span of ``x_i * g_a`` in degree
``r + 1`` has the same dimension as ``J_{r+1}``: one product per monomial of
``J_{r+1}`` is kept as a reducer, and every other product must reduce to zero.
The remainder coefficients are the defining equations.

Variables are handled internally as integer indices into ``variables``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .algebra import (
    INHOMOGENEOUS,
    Exponent,
    TPolynomial,
    XPolynomial,
    add_exponents,
    format_monomial,
    iadd_product,
    normalize,
    rank,
    substitute_terms,
    unit,
)
from .enumeration import CornerSet, default_names, expansion
from .orders import MonomialOrder, WeightVector


class TVariable(NamedTuple):
    corner: Exponent
    tail: Exponent

    def label(self, names) -> str:
        return f"T[{format_monomial(self.corner, names)},{format_monomial(self.tail, names)}]"


@dataclass
class MarkedFamily:
    corner_set: CornerSet
    order: MonomialOrder
    omega: WeightVector
    variables: List[TVariable]
    weights: List[int]
    # corner -> {monomial: TPolynomial coefficient}
    generators: Dict[Exponent, Dict[Exponent, TPolynomial]]
    tails: Dict[Exponent, List[Tuple[Exponent, int]]] = field(repr=False)

    @property
    def n(self) -> int:
        return self.corner_set.n

    def weight_map(self) -> Dict[int, int]:
        return dict(enumerate(self.weights))


def build_family(J: CornerSet, order: MonomialOrder, omega: WeightVector) -> MarkedFamily:
    variables: List[TVariable] = []
    weights: List[int] = []
    tails: Dict[Exponent, List[Tuple[Exponent, int]]] = {}
    gens: Dict[Exponent, Dict[Exponent, TPolynomial]] = {}
    for a in order.sorted(J.corners):
        ka = order.key(a)
        row = []
        g = {a: TPolynomial.const(1)}
        for b in order.sorted(J.delta_r, descending=True):
            if order.key(b) < ka:
                idx = len(variables)
                variables.append(TVariable(a, b))
                w = omega.dot(a) - omega.dot(b)
                if w <= 0:
                    raise AssertionError(f"non-positive weight {w} for T[{a},{b}]")
                weights.append(w)
                row.append((b, idx))
                g[b] = TPolynomial.var(idx, -1)
        tails[a] = row
        gens[a] = g
    return MarkedFamily(J, order, omega, variables, weights, gens, tails)


@dataclass
class StratumPresentation:
    variables: List[TVariable]
    equations: List[TPolynomial]
    weights: List[int]
    # (marked monomial, standard monomial) each equation came from
    sources: List[Tuple[Exponent, Exponent]] = field(default_factory=list)

    def weight_map(self) -> Dict[int, int]:
        return dict(enumerate(self.weights))


def _canonical_pairs(J: CornerSet, order: MonomialOrder):
    """Map each m in J_{r+1} to (i, corner) with minimal i, and list the other pairs."""
    n = J.n
    corners = set(J.corners)
    canonical: Dict[Exponent, Tuple[int, Exponent]] = {}
    extra: List[Tuple[int, Exponent, Exponent]] = []
    for m in order.sorted(expansion(J.corners, n)):
        first = None
        for i in range(n + 1):
            if m[i] == 0:
                continue
            a = tuple(x - (1 if j == i else 0) for j, x in enumerate(m))
            if a in corners:
                if first is None:
                    first = (i, a)
                else:
                    extra.append((i, a, m))
        if first is None:
            raise AssertionError(f"{m} has no decomposition through a corner")
        canonical[m] = first
    return canonical, extra


def stratum_equations(fam: MarkedFamily) -> StratumPresentation:
    J, order, n = fam.corner_set, fam.order, fam.n
    canonical, extra = _canonical_pairs(J, order)
    shift = [unit(n + 1, i) for i in range(n + 1)]

    # normal forms N(m) = m mod span of reducers, supported on Delta_{r+1};
    # J_{r+1} is walked in ascending order, so every tail monomial already has one
    normal: Dict[Exponent, Dict[Exponent, dict]] = {}

    def reduce_tail(i: int, a: Exponent) -> Dict[Exponent, dict]:
        """Normal form of sum_b T_{a,b} x_i x^b."""
        out: Dict[Exponent, dict] = {}
        for b, idx in fam.tails[a]:
            u = add_exponents(b, shift[i])
            var = {(idx,): 1}
            if u in canonical:
                nf = normal[u]
                for d, coeff in nf.items():
                    tgt = out.setdefault(d, {})
                    iadd_product(tgt, var, coeff)
            else:
                tgt = out.setdefault(u, {})
                v = tgt.get((idx,), 0) + 1
                if v:
                    tgt[(idx,)] = v
                else:
                    del tgt[(idx,)]
        return {d: c for d, c in out.items() if c}

    for m, (i, a) in canonical.items():
        normal[m] = reduce_tail(i, a)

    weights = fam.weight_map()
    equations: List[TPolynomial] = []
    sources: List[Tuple[Exponent, Exponent]] = []
    seen = set()
    for j, a2, m in extra:
        other = reduce_tail(j, a2)
        diff: Dict[Exponent, dict] = {d: dict(c) for d, c in normal[m].items()}
        for d, coeff in other.items():
            tgt = diff.setdefault(d, {})
            for k, c in coeff.items():
                v = tgt.get(k, 0) - c
                if v:
                    tgt[k] = v
                else:
                    tgt.pop(k, None)
        for d in order.sorted(diff, descending=True):
            terms = diff[d]
            if not terms:
                continue
            eq = TPolynomial._raw(terms)
            wd = eq.weighted_degree(weights)
            expected = fam.omega.dot(m) - fam.omega.dot(d)
            if wd is INHOMOGENEOUS or wd != expected or expected <= 0:
                raise AssertionError(f"equation for ({m},{d}) has weighted degree {wd}, expected {expected}")
            if () in eq.terms:
                raise AssertionError("stratum equation with a constant term")
            # canonical sign so duplicates up to sign collapse
            lead = min(eq.terms)
            if eq.terms[lead] < 0:
                eq = -eq
            h = frozenset(eq.terms.items())
            if h in seen:
                continue
            seen.add(h)
            equations.append(eq)
            sources.append((m, d))
    return StratumPresentation(list(fam.variables), equations, list(fam.weights), sources)


def tangent_dimension(pres: StratumPresentation) -> int:
    return len(pres.variables) - rank(eq.linear_part() for eq in pres.equations)


@dataclass
class StratumClassification:
    verdict: str  # "cell" or "singular"
    tangent_dim: int
    residual_equation_count: int
    # eliminated variable -> expression in later/free variables, in elimination order
    substitutions: List[Tuple[int, TPolynomial]] = field(default_factory=list, repr=False)
    free_variables: List[int] = field(default_factory=list, repr=False)
    residual: List[TPolynomial] = field(default_factory=list, repr=False)

    @property
    def is_cell(self) -> bool:
        return self.verdict == "cell"

    @property
    def cell_dim(self) -> Optional[int]:
        return self.tangent_dim if self.is_cell else None


def _pick_linear(eq: dict):
    """Best linear variable of an equation: unit coefficient first, then lowest index."""
    best = None
    for k, c in eq.items():
        if len(k) == 1:
            score = (0 if c in (1, -1) else 1, k[0])
            if best is None or score < best[0]:
                best = (score, k[0], c)
    return best


def classify(pres: StratumPresentation, check: bool = True) -> StratumClassification:
    """Eliminate variables that occur linearly until no linear term is left.

    Equations are weighted homogeneous with positive weights, so a variable
    appearing linearly in an equation appears nowhere else in it and can be
    solved for. If nothing remains the stratum is an affine space. A nonzero
    residual equation without linear part cuts the ambient affine space down
    by at least one dimension while the tangent space at the origin keeps its
    full dimension, so the stratum is singular at the monomial point.
    """
    eqs: Dict[int, dict] = {i: dict(e.terms) for i, e in enumerate(pres.equations) if e.terms}
    occurs: Dict[int, set] = {}
    for i, e in eqs.items():
        for k in e:
            for v in k:
                occurs.setdefault(v, set()).add(i)
    remaining = set(range(len(pres.variables)))
    eliminated = set()
    substitutions: List[Tuple[int, dict]] = []

    while True:
        best = None
        for i, e in eqs.items():
            pick = _pick_linear(e)
            if pick is None:
                continue
            score = (pick[0][0], len(e), i)
            if best is None or score < best[0]:
                best = (score, i, pick[1], pick[2])
        if best is None:
            break
        _, i, v, c = best
        e = eqs.pop(i)
        for k in e:
            for u in k:
                occurs.get(u, set()).discard(i)
        # v := -(e - c v) / c
        expr = {k: normalize(Fraction(-cc) / c) for k, cc in e.items() if k != (v,)}
        if check and any(v in k for k in expr):
            raise AssertionError(f"variable {v} scheduled for elimination reappears")
        substitutions.append((v, expr))
        remaining.discard(v)
        eliminated.add(v)
        for j in sorted(occurs.pop(v, set())):
            old = eqs[j]
            for k in old:
                for u in k:
                    occurs.get(u, set()).discard(j)
            new = substitute_terms(old, v, expr)
            new = {k: normalize(x) for k, x in new.items() if x}
            if new:
                eqs[j] = new
                for k in new:
                    for u in k:
                        occurs.setdefault(u, set()).add(j)
            else:
                del eqs[j]

    residual = [TPolynomial._raw(e) for e in eqs.values() if e]
    if check:
        for e in residual:
            if e.linear_part():
                raise AssertionError("residual equation still has a linear term")
            if any(v in eliminated for v in e.variables()):
                raise AssertionError("eliminated variable survived in a residual equation")
    p = len(remaining)
    verdict = "singular" if residual else "cell"
    return StratumClassification(
        verdict=verdict,
        tangent_dim=p,
        residual_equation_count=len(residual),
        substitutions=[(v, TPolynomial._raw(ex)) for v, ex in substitutions],
        free_variables=sorted(remaining),
        residual=residual,
    )


def cell_point(cls: StratumClassification, free_values: Mapping[int, object]) -> Dict[int, object]:
    """Point on an affine cell from values of its free coordinates."""
    point = {v: normalize(free_values[v]) for v in cls.free_variables}
    for v, expr in reversed(cls.substitutions):
        point[v] = expr.evaluate(point)
    return point


def random_cell_point(cls: StratumClassification, rng: random.Random) -> Dict[int, object]:
    """Small random rationals: numerators in [-9, 9], denominators in [1, 9]."""
    vals = {v: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for v in cls.free_variables}
    return cell_point(cls, vals)


def torus_act(point: Mapping, t, weights: Mapping) -> dict:
    """``T_{a,b} -> t^{wt(T_{a,b})} * T_{a,b}``; the limit t -> 0 is the monomial ideal."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero; the limit t -> 0 is not evaluated")
    return {v: normalize(val * t ** weights[v]) for v, val in point.items()}


def specialize(fam: MarkedFamily, point: Mapping[int, object]) -> List[XPolynomial]:
    """The generators ``g_a`` with the T-coordinates replaced by ``point``."""
    missing = [i for i in range(len(fam.variables)) if i not in point]
    if missing:
        raise ValueError(f"no value for variables {missing[:5]}{'...' if len(missing) > 5 else ''}")
    out = []
    for a, g in fam.generators.items():
        out.append(XPolynomial({e: c.evaluate(point) for e, c in g.items()}))
    return out


def satisfies(pres: StratumPresentation, point: Mapping) -> bool:
    return all(eq.evaluate(point) == 0 for eq in pres.equations)


@dataclass
class StratumResult:
    corner_set: CornerSet
    n_variables: int
    n_equations: int
    tangent_dim: int
    classification: StratumClassification


def analyze(J: CornerSet, order: MonomialOrder, omega: WeightVector, check: bool = True) -> StratumResult:
    fam = build_family(J, order, omega)
    pres = stratum_equations(fam)
    cls = classify(pres, check=check)
    p = tangent_dimension(pres)
    if p != cls.tangent_dim:
        raise AssertionError(f"tangent dimension {p} disagrees with elimination residue {cls.tangent_dim}")
    return StratumResult(J, len(fam.variables), len(pres.equations), p, cls)


def variable_names(fam_or_pres, names: Sequence[str] | None = None) -> Dict[int, str]:
    n_vars = len(fam_or_pres.variables[0].corner) if fam_or_pres.variables else 0
    names = names or default_names(n_vars - 1) if n_vars else []
    return {i: v.label(names) for i, v in enumerate(fam_or_pres.variables)}

"""Aggregate per-ideal strata into Betti tables, homology and singular lists."""
from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .algebra import Exponent, format_monomial
from .enumeration import default_names, enumerate_M, ideal_key
from .hilbert import HilbertPolynomial, decomposed
from .oracle import IdealPresentation, initial_ideal
from .orders import MonomialOrder, WeightVector, realize_weight
from .stratum import (
    StratumResult,
    analyze,
    build_family,
    classify,
    random_cell_point,
    specialize,
    stratum_equations,
)


class NotSmoothError(ValueError):
    """The homology formula needs every stratum to be an affine cell."""


@dataclass
class IdealRow:
    key: str
    generators: List[str]
    corners: List[Exponent]
    tangent_dim: int
    verdict: str
    cell_dim: Optional[int]
    n_variables: int = 0
    n_equations: int = 0

    def as_json(self) -> dict:
        return {
            "key": self.key,
            "generators": self.generators,
            "tangent_dim": self.tangent_dim,
            "verdict": self.verdict,
            "cell_dim": self.cell_dim,
        }


@dataclass
class DecompositionReport:
    P: str
    n: int
    order: MonomialOrder
    names: Sequence[str]
    omega: WeightVector
    rows: List[IdealRow]
    betti: List[int] = field(default_factory=list)
    singular: List[str] = field(default_factory=list)

    @property
    def all_smooth(self) -> bool:
        return not self.singular

    @property
    def order_name(self) -> str:
        return self.order.kind

    def to_json(self) -> dict:
        return {
            "P": self.P,
            "n": self.n,
            "order": self.order.kind,
            "omega": list(self.omega.omega),
            "ideals": [row.as_json() for row in self.rows],
            "betti": list(self.betti),
            "singular": list(self.singular),
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def render_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "tangent_dim", "verdict", "cell_dim"])
        for row in self.rows:
            w.writerow([row.key, row.tangent_dim, row.verdict, "" if row.cell_dim is None else row.cell_dim])
        return buf.getvalue()

    def render_text(self) -> str:
        lines = [
            f"Hilbert scheme Hilb^{{{self.P}}}(P^{self.n})",
            f"order: {self.order.describe(self.names)}   omega: {list(self.omega.omega)}",
            f"|M| = {len(self.rows)}   affine cells: {len(self.rows) - len(self.singular)}   singular: {len(self.singular)}",
            "",
            "m      " + " ".join(f"{m:>4}" for m in range(len(self.betti))),
            "cells  " + " ".join(f"{b:>4}" for b in self.betti),
        ]
        if self.singular:
            lines += ["", "singular strata (tangent dimension):"]
            dims = {row.key: row.tangent_dim for row in self.rows}
            lines += [f"  <{k}>  p = {dims[k]}" for k in self.singular]
        if self.all_smooth:
            ht = homology_from(self)
            lines += ["", "homology ranks: " + ", ".join(f"H_{m}={v}" for m, v in enumerate(ht.ranks) if v)]
        return "\n".join(lines) + "\n"


def _analyze_job(args):
    J, order, omega = args
    return analyze(J, order, omega)


def _resolve_jobs(jobs: Optional[int]) -> int:
    if jobs is None:
        jobs = int(os.environ.get("HILB_STRATA_JOBS", "1") or 1)
    return max(1, jobs)


def decompose(P: HilbertPolynomial, n: int, order: MonomialOrder,
              names: Sequence[str] | None = None, jobs: int | None = None) -> DecompositionReport:
    """Enumerate M_{P,n} and classify every stratum."""
    if P.macaulay is None:
        P = decomposed(P)
    names = tuple(names or default_names(n))
    omega = realize_weight(order, n, P.gotzmann)
    ideals = enumerate_M(P, n, order, names)
    jobs = _resolve_jobs(jobs)
    work = [(J, order, omega) for J in ideals]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results: List[StratumResult] = list(ex.map(_analyze_job, work, chunksize=4))
    else:
        results = [_analyze_job(w) for w in work]
    return assemble(str(P), n, order, names, omega, results)


def assemble(P_text: str, n: int, order: MonomialOrder, names, omega: WeightVector,
             results: Sequence[StratumResult]) -> DecompositionReport:
    rows = []
    for res in results:
        J = res.corner_set
        gens = order.sorted(J.corners)
        cls = res.classification
        rows.append(IdealRow(
            key=ideal_key(J.corners, order, names),
            generators=[format_monomial(e, names) for e in gens],
            corners=gens,
            tangent_dim=res.tangent_dim,
            verdict=cls.verdict,
            cell_dim=cls.cell_dim,
            n_variables=res.n_variables,
            n_equations=res.n_equations,
        ))
    rows.sort(key=lambda row: row.key)
    top = max((row.tangent_dim for row in rows), default=-1)
    betti = [0] * (top + 1)
    for row in rows:
        if row.verdict == "cell":
            betti[row.cell_dim] += 1
    singular = sorted(row.key for row in rows if row.verdict == "singular")
    rep = DecompositionReport(P_text, n, order, names, omega, rows, betti, singular)
    if sum(betti) + len(singular) != len(rows):
        raise AssertionError("count conservation violated")
    return rep


def betti_table(P: HilbertPolynomial, n: int, order: MonomialOrder) -> List[int]:
    return decompose(P, n, order).betti


def singular_loci(P: HilbertPolynomial, n: int, order: MonomialOrder) -> List[str]:
    return decompose(P, n, order).singular


@dataclass
class HomologyTable:
    ranks: List[int]
    valid: bool = True

    def group(self, m: int) -> str:
        k = self.ranks[m] if 0 <= m < len(self.ranks) else 0
        return "0" if k == 0 else ("Z" if k == 1 else f"Z^{k}")


def homology_from(report: DecompositionReport) -> HomologyTable:
    if not report.all_smooth:
        raise NotSmoothError(
            f"homology formula requires all strata smooth; {len(report.singular)} singular strata found")
    dim = max((m for m, b in enumerate(report.betti) if b), default=0)
    ranks = [0] * (2 * dim + 1)
    for m in range(dim + 1):
        ranks[2 * m] = report.betti[m]
    return HomologyTable(ranks)


def homology(P: HilbertPolynomial, n: int, order: MonomialOrder) -> HomologyTable:
    return homology_from(decompose(P, n, order))


def cell_order(report: DecompositionReport, omega: WeightVector | None = None) -> List[str]:
    """Heuristic closure order: ascending total weight of the corners, then key."""
    omega = omega or report.omega
    weight = {row.key: sum(omega.dot(c) for c in row.corners) for row in report.rows}
    return sorted(weight, key=lambda k: (weight[k], k))


@dataclass
class VerifyRow:
    key: str
    points: int
    agree: int


def verify(P: HilbertPolynomial, n: int, order: MonomialOrder, seed: int = 0, points: int = 3,
           names: Sequence[str] | None = None, cap: int | None = None) -> List[VerifyRow]:
    """Sample points on every affine cell and compare the oracle's initial ideal with J."""
    if P.macaulay is None:
        P = decomposed(P)
    names = tuple(names or default_names(n))
    r = P.gotzmann
    cap = cap if cap is not None else r + 3
    omega = realize_weight(order, n, r)
    rng = random.Random(seed)
    out = []
    for J in enumerate_M(P, n, order, names):
        fam = build_family(J, order, omega)
        pres = stratum_equations(fam)
        cls = classify(pres)
        if not cls.is_cell:
            continue
        agree = 0
        for _ in range(points):
            pt = random_cell_point(cls, rng)
            if any(eq.evaluate(pt) for eq in pres.equations):
                continue
            ini = initial_ideal(IdealPresentation(specialize(fam, pt), order), cap)
            agree += ini == set(J.corners)
        out.append(VerifyRow(ideal_key(J.corners, order, names), points, agree))
    return out

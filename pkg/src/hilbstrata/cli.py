"""Command-line interface: ``hilbstrata <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set

from .algebra import Exponent, format_monomial
from .enumeration import CornerSet, default_names, enumerate_M, ideal_key
from .hilbert import InadmissibleError, PolynomialSyntaxError, chart_counts, decomposed, parse_hilbert_polynomial
from .orders import KINDS, MonomialOrder, parse_precedence, realize_weight
from .report import NotSmoothError, cell_order, decompose, homology_from, verify
from .stratum import build_family, classify, stratum_equations, tangent_dimension, variable_names


class MonomialSyntaxError(ValueError):
    pass


def _parse_monomial(text: str, names: Sequence[str]) -> Exponent:
    e = [0] * len(names)
    by_len = sorted(range(len(names)), key=lambda i: -len(names[i]))
    s = text.strip()
    if not s:
        raise MonomialSyntaxError("empty monomial")
    pos = 0
    while pos < len(s):
        if s[pos] in " *":
            pos += 1
            continue
        for i in by_len:
            if s.startswith(names[i], pos):
                pos += len(names[i])
                break
        else:
            raise MonomialSyntaxError(f"unknown variable at {s[pos:]!r} in {text.strip()!r}")
        power = 1
        if pos < len(s) and s[pos] == "^":
            pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise MonomialSyntaxError(f"malformed power in {text.strip()!r}")
            power = int(s[start:pos])
        e[i] += power
    return tuple(e)


def parse_monomial_ideal(text: str, n: int, names: Sequence[str] | None = None) -> Set[Exponent]:
    """Parse ``"w^3, zw^2, yw^2"`` into a set of exponent vectors."""
    names = list(names or default_names(n))
    if len(names) != n + 1:
        raise ValueError(f"need {n + 1} variable names, got {len(names)}")
    out: Set[Exponent] = set()
    for part in text.split(","):
        e = _parse_monomial(part, names)
        if e in out:
            raise MonomialSyntaxError(f"duplicate generator {part.strip()!r}")
        out.add(e)
    return out


@dataclass
class RunConfig:
    command: str
    P: str = ""
    n: int = 1
    order: str = "degrevlex"
    precedence: Optional[str] = None
    fmt: str = "text"
    out: Optional[str] = None
    seed: int = 0
    jobs: Optional[int] = None
    ideal: Optional[str] = None
    points: int = 3
    cap: Optional[int] = None
    cells: bool = False

    def __post_init__(self):
        if self.command != "gotzmann" and self.n < 1:
            raise ValueError("n must be at least 1")

    def monomial_order(self) -> MonomialOrder:
        names = default_names(self.n)
        prec = parse_precedence(self.precedence, names) if self.precedence else None
        return MonomialOrder.make(self.order, self.n, prec)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_gotzmann(cfg: RunConfig) -> str:
    P = decomposed(parse_hilbert_polynomial(cfg.P))
    if cfg.fmt == "json":
        return _dump({"P": str(P), "r": P.gotzmann, "macaulay": list(P.macaulay)})
    if cfg.fmt == "csv":
        return _csv(["P", "r", "macaulay"], [[str(P), P.gotzmann, " ".join(map(str, P.macaulay))]])
    return f"P = {P}\nr = {P.gotzmann}\na = ({', '.join(map(str, P.macaulay))})\n"


def cmd_enumerate(cfg: RunConfig) -> str:
    P = decomposed(parse_hilbert_polynomial(cfg.P))
    order = cfg.monomial_order()
    names = default_names(cfg.n)
    ideals = enumerate_M(P, cfg.n, order, names)
    keys = [J.key(order, names) for J in ideals]
    if cfg.fmt == "json":
        return _dump({
            "P": str(P), "n": cfg.n, "order": order.kind, "count": len(ideals),
            "ideals": [{"key": k, "generators": k.split(", ")} for k in keys],
        })
    if cfg.fmt == "csv":
        return _csv(["key"], [[k] for k in keys])
    cc = chart_counts(P, cfg.n)
    head = (f"M_{{{P},{cfg.n}}}: {len(ideals)} ideals "
            f"(r = {cc.r}, {cc.corners_target} generators, {cc.expansion_target} in degree {cc.r + 1})\n")
    return head + "".join(f"<{k}>\n" for k in keys)


def cmd_decompose(cfg: RunConfig) -> str:
    P = decomposed(parse_hilbert_polynomial(cfg.P))
    rep = decompose(P, cfg.n, cfg.monomial_order(), jobs=cfg.jobs)
    if cfg.fmt == "json":
        return rep.render_json()
    if cfg.fmt == "csv":
        return rep.render_csv()
    text = rep.render_text()
    if cfg.cells:
        text += "\nsuggested cell order (heuristic, by total corner weight):\n"
        text += "".join(f"  <{k}>\n" for k in cell_order(rep))
    return text


def cmd_stratum(cfg: RunConfig) -> str:
    if not cfg.ideal:
        raise ValueError("--ideal is required")
    P = decomposed(parse_hilbert_polynomial(cfg.P))
    cc = chart_counts(P, cfg.n)
    names = default_names(cfg.n)
    corners = parse_monomial_ideal(cfg.ideal, cfg.n, names)
    J = CornerSet.from_corners(corners, cfg.n, cc.r)
    if len(J.corners) != cc.corners_target or len(J.expansion()) != cc.expansion_target:
        raise InadmissibleError(f"<{cfg.ideal}> is not in M_{{{P},{cfg.n}}}")
    order = cfg.monomial_order()
    omega = realize_weight(order, cfg.n, cc.r)
    fam = build_family(J, order, omega)
    pres = stratum_equations(fam)
    res = classify(pres)
    p = tangent_dimension(pres)
    label = variable_names(fam, names)
    eqs = [eq.to_string(label.__getitem__) for eq in pres.equations]
    verdict = res.verdict
    if cfg.fmt == "json":
        return _dump({
            "P": str(P), "n": cfg.n, "order": order.kind, "omega": list(omega.omega),
            "key": ideal_key(J.corners, order, names),
            "variables": [{"name": label[i], "weight": w} for i, w in enumerate(pres.weights)],
            "equations": eqs,
            "tangent_dim": p,
            "verdict": verdict,
            "cell_dim": res.cell_dim,
            "residual_equations": res.residual_equation_count,
        })
    lines = [
        f"J = <{ideal_key(J.corners, order, names)}>",
        f"order: {order.describe(names)}   omega: {list(omega.omega)}",
        f"{len(pres.variables)} variables:",
    ]
    lines += [f"  {label[i]}  weight {w}" for i, w in enumerate(pres.weights)]
    lines.append(f"{len(eqs)} equations:")
    lines += [f"  {e}" for e in eqs]
    lines.append(f"tangent dimension: {p}")
    if res.is_cell:
        lines.append(f"verdict: affine cell A^{res.cell_dim}")
    else:
        lines.append(f"verdict: singular at the monomial point ({res.residual_equation_count} residual equations)")
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig):
    P = decomposed(parse_hilbert_polynomial(cfg.P))
    rows = verify(P, cfg.n, cfg.monomial_order(), seed=cfg.seed, points=cfg.points, cap=cfg.cap)
    total = sum(r.points for r in rows)
    agree = sum(r.agree for r in rows)
    ok = agree == total
    if cfg.fmt == "json":
        text = _dump({
            "P": str(P), "n": cfg.n, "order": cfg.order, "seed": cfg.seed,
            "strata": [{"key": r.key, "points": r.points, "agree": r.agree} for r in rows],
            "agree": agree, "total": total, "ok": ok,
        })
    elif cfg.fmt == "csv":
        text = _csv(["key", "points", "agree"], [[r.key, r.points, r.agree] for r in rows])
    else:
        lines = [f"{'ok  ' if r.agree == r.points else 'FAIL'} <{r.key}>  {r.agree}/{r.points}" for r in rows]
        lines.append(f"oracle agreement: {agree}/{total} points on {len(rows)} affine cells (seed {cfg.seed})")
        text = "\n".join(lines) + "\n"
    return text, ok


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=KINDS, default="degrevlex", help="monomial order (default: degrevlex)")
    p.add_argument("--precedence", help="variable precedence, e.g. 'x>y>z>w' (default: listed order)")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write output to FILE instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="random seed for sampling (default: 0)")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $HILB_STRATA_JOBS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbstrata",
        description="Decompose Hilbert schemes Hilb^P(P^n) into Groebner strata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gotzmann", help="Macaulay decomposition and Gotzmann number of P")
    p.add_argument("P", help="Hilbert polynomial in t, e.g. '2t+2'")
    _common(p)

    p = sub.add_parser("enumerate", help="list the monomial ideals M_{P,n}")
    p.add_argument("P")
    p.add_argument("n", type=int)
    _common(p)

    p = sub.add_parser("decompose", help="classify every stratum and report Betti numbers")
    p.add_argument("P")
    p.add_argument("n", type=int)
    p.add_argument("--cells", action="store_true", help="append a heuristic cell order (text format)")
    _common(p)

    p = sub.add_parser("stratum", help="equations and verdict for one ideal")
    p.add_argument("P")
    p.add_argument("n", type=int)
    p.add_argument("--ideal", required=True, help="generators, e.g. 'w^3, zw^2, yw^2, ...'")
    _common(p)

    p = sub.add_parser("verify", help="check affine cells against a Buchberger oracle")
    p.add_argument("P")
    p.add_argument("n", type=int)
    p.add_argument("--points", type=int, default=3, help="points sampled per cell (default: 3)")
    p.add_argument("--cap", type=int, default=None, help="Buchberger degree cap (default: r + 3)")
    _common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        P=ns.P,
        n=getattr(ns, "n", 1),
        order=ns.order,
        precedence=ns.precedence,
        fmt=ns.fmt,
        out=ns.out,
        seed=ns.seed,
        jobs=ns.jobs,
        ideal=getattr(ns, "ideal", None),
        points=getattr(ns, "points", 3),
        cap=getattr(ns, "cap", None),
        cells=getattr(ns, "cells", False),
    )


def _error(cfg: Optional[RunConfig], kind: str, msg: str, code: int) -> int:
    if cfg is not None and cfg.fmt == "json":
        sys.stderr.write(_dump({"error": {"type": kind, "message": msg}}))
    else:
        sys.stderr.write(f"hilbstrata: error: {msg}\n")
    return code


def run(cfg: RunConfig) -> int:
    try:
        ok = True
        if cfg.command == "gotzmann":
            text = cmd_gotzmann(cfg)
        elif cfg.command == "enumerate":
            text = cmd_enumerate(cfg)
        elif cfg.command == "decompose":
            text = cmd_decompose(cfg)
        elif cfg.command == "stratum":
            text = cmd_stratum(cfg)
        elif cfg.command == "verify":
            text, ok = cmd_verify(cfg)
        else:
            return _error(cfg, "usage", f"unknown command {cfg.command!r}", 2)
        _emit(cfg, text)
        return 0 if ok else 1
    except (InadmissibleError, NotSmoothError) as exc:
        return _error(cfg, "inadmissible", str(exc), 2)
    except (PolynomialSyntaxError, MonomialSyntaxError) as exc:
        return _error(cfg, "syntax", str(exc), 2)
    except OSError as exc:
        return _error(cfg, "io", str(exc), 3)
    except ValueError as exc:
        return _error(cfg, "invalid", str(exc), 2)


def main(argv: Optional[List[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        return _error(None, "invalid", str(exc), 2)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

import random
from fractions import Fraction

import pytest
import sympy

from conftest import hp
from golden import SINGULAR_2T2
from hilbstrata.algebra import INHOMOGENEOUS, TPolynomial, XPolynomial
from hilbstrata.cli import parse_monomial_ideal
from hilbstrata.enumeration import CornerSet, enumerate_M
from hilbstrata.oracle import IdealPresentation, initial_ideal
from hilbstrata.orders import MonomialOrder, WeightVector, realize_weight
from hilbstrata.stratum import (
    StratumPresentation,
    TVariable,
    analyze,
    build_family,
    cell_point,
    classify,
    random_cell_point,
    satisfies,
    specialize,
    stratum_equations,
    tangent_dimension,
    torus_act,
)

LEX1 = MonomialOrder.make("lex", 1)
OMEGA1 = realize_weight(LEX1, 1, 2)


def family(corners, n=1, r=2, order=LEX1, omega=OMEGA1):
    return build_family(CornerSet.from_corners(corners, n, r), order, omega)


def test_family_xy():
    fam = family([(1, 1)])
    assert fam.variables == [TVariable((1, 1), (0, 2))]
    g = fam.generators[(1, 1)]
    assert set(g) == {(1, 1), (0, 2)}
    assert g[(0, 2)] == TPolynomial.var(0, -1)
    assert fam.weights == [OMEGA1.dot((1, 1)) - OMEGA1.dot((0, 2))]


def test_family_y2_has_no_variables():
    fam = family([(0, 2)])
    assert fam.variables == []
    assert specialize(fam, {}) == [XPolynomial({(0, 2): 1})]


def test_family_x2():
    fam = family([(2, 0)])
    assert [v.tail for v in fam.variables] == [(1, 1), (0, 2)]


@pytest.mark.parametrize("corner", [(1, 1), (2, 0)])
def test_no_equations_for_two_points_on_a_line(corner):
    pres = stratum_equations(family([corner]))
    assert pres.equations == []
    c = classify(pres)
    assert c.is_cell and c.cell_dim == len(pres.variables)


def test_xy_family_has_initial_ideal_xy():
    fam = family([(1, 1)])
    rng = random.Random(5)
    for _ in range(5):
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        gens = specialize(fam, {0: t})
        assert gens == [XPolynomial({(1, 1): 1, (0, 2): -t})]
        assert initial_ideal(IdealPresentation(gens, LEX1), 5) == {(1, 1)}


def test_specialize_examples():
    fam = family([(1, 1)])
    assert specialize(fam, {0: 3}) == [XPolynomial({(1, 1): 1, (0, 2): -3})]
    assert specialize(fam, {0: 0}) == [XPolynomial({(1, 1): 1})]
    with pytest.raises(ValueError):
        specialize(fam, {})


def test_tangent_dimension_examples():
    none = StratumPresentation([None] * 5, [], [1] * 5)
    assert tangent_dimension(none) == 5
    u, v, w = (TPolynomial.var(i) for i in range(3))
    pres = StratumPresentation([None] * 3, [v - w * w, w + v * u], [1, 2, 1])
    assert tangent_dimension(pres) == 1
    jac = sympy.Matrix([[0, 1, 0], [0, 0, 1]])
    assert 3 - jac.rank() == 1


def test_classify_one_substitution():
    v, w = TPolynomial.var(0), TPolynomial.var(1)
    pres = StratumPresentation([None, None], [v - w * w], [2, 1])
    c = classify(pres)
    assert c.is_cell and c.cell_dim == 1 and c.residual_equation_count == 0
    pt = cell_point(c, {1: 3})
    assert pt == {0: 9, 1: 3}


def test_classify_singular_cone():
    v, w = TPolynomial.var(0), TPolynomial.var(1)
    pres = StratumPresentation([None, None], [v * w], [1, 1])
    c = classify(pres)
    assert c.verdict == "singular" and c.tangent_dim == 2 and c.cell_dim is None


def test_classify_no_equations():
    c = classify(StratumPresentation([None] * 4, [], [1] * 4))
    assert c.is_cell and c.cell_dim == 4


def test_J1_degrevlex_is_singular():
    order = MonomialOrder.make("degrevlex", 3)
    omega = realize_weight(order, 3, 3)
    J = CornerSet.from_corners(parse_monomial_ideal(SINGULAR_2T2[1], 3), 3, 3)
    fam = build_family(J, order, omega)
    pres = stratum_equations(fam)
    assert pres.equations
    c = classify(pres)
    assert c.verdict == "singular"
    assert c.residual and all(not e.linear_part() for e in c.residual)
    assert c.tangent_dim == tangent_dimension(pres)


def test_oracle_detects_points_off_a_singular_stratum():
    # a generic point of the ambient space is not on J_1's stratum
    order = MonomialOrder.make("degrevlex", 3)
    omega = realize_weight(order, 3, 3)
    J = CornerSet.from_corners(parse_monomial_ideal(SINGULAR_2T2[1], 3), 3, 3)
    fam = build_family(J, order, omega)
    pres = stratum_equations(fam)
    rng = random.Random(1)
    pt = {i: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for i in range(len(fam.variables))}
    assert not satisfies(pres, pt)
    assert initial_ideal(IdealPresentation(specialize(fam, pt), order), 6) != set(J.corners)


def test_torus_act_examples():
    pt = {0: Fraction(2), 1: Fraction(-3, 7)}
    wts = {0: 2, 1: 5}
    assert torus_act(pt, 1, wts) == pt
    with pytest.raises(ValueError):
        torus_act(pt, 0, wts)
    cur = pt
    for _ in range(6):
        nxt = torus_act(cur, Fraction(1, 2), wts)
        assert all(abs(nxt[v]) < abs(cur[v]) for v in cur)
        cur = nxt


INSTANCES = [("2", 1), ("3", 2), ("t+1", 3), ("2t+1", 3), ("2t+1", 2)]


@pytest.mark.parametrize("kind", ["lex", "degrevlex"])
@pytest.mark.parametrize("P,n", INSTANCES)
def test_equations_homogeneous_positive_no_constant(P, n, kind):
    poly = hp(P)
    order = MonomialOrder.make(kind, n)
    omega = realize_weight(order, n, poly.gotzmann)
    for J in enumerate_M(poly, n, order):
        fam = build_family(J, order, omega)
        assert all(w > 0 for w in fam.weights)
        pres = stratum_equations(fam)
        wmap = pres.weight_map()
        for eq, (m, d) in zip(pres.equations, pres.sources):
            deg = eq.weighted_degree(wmap)
            assert deg is not INHOMOGENEOUS
            assert deg == omega.dot(m) - omega.dot(d) > 0
            assert eq.constant_term() == 0
        assert satisfies(pres, {i: 0 for i in range(len(fam.variables))})


@pytest.mark.parametrize("kind", ["lex", "degrevlex"])
@pytest.mark.parametrize("P,n", INSTANCES)
def test_rank_against_sympy(P, n, kind):
    poly = hp(P)
    order = MonomialOrder.make(kind, n)
    omega = realize_weight(order, n, poly.gotzmann)
    for J in enumerate_M(poly, n, order):
        pres = stratum_equations(build_family(J, order, omega))
        nv = len(pres.variables)
        rows = [[eq.linear_part().get(i, 0) for i in range(nv)] for eq in pres.equations]
        rk = sympy.Matrix(rows).rank() if rows and nv else 0
        assert tangent_dimension(pres) == nv - rk == classify(pres).tangent_dim


@pytest.mark.parametrize("kind", ["lex", "degrevlex"])
@pytest.mark.parametrize("P,n", [("3", 2), ("t+1", 3), ("2t+1", 3)])
def test_cells_sample_onto_J_and_are_torus_stable(P, n, kind):
    poly = hp(P)
    order = MonomialOrder.make(kind, n)
    omega = realize_weight(order, n, poly.gotzmann)
    rng = random.Random(0)
    for J in enumerate_M(poly, n, order):
        fam = build_family(J, order, omega)
        pres = stratum_equations(fam)
        c = classify(pres)
        assert c.is_cell
        for _ in range(3):
            pt = random_cell_point(c, rng)
            assert satisfies(pres, pt)
            t = Fraction(rng.choice([-3, -2, 2, 3]), rng.randint(1, 5))
            assert satisfies(pres, torus_act(pt, t, pres.weight_map()))
            gens = specialize(fam, pt)
            assert initial_ideal(IdealPresentation(gens, order), poly.gotzmann + 3) == set(J.corners)


def test_analyze_agreement_on_all_2t2_degrevlex():
    poly = hp("2t+2")
    order = MonomialOrder.make("degrevlex", 3)
    omega = realize_weight(order, 3, 3)
    for J in enumerate_M(poly, 3, order):
        res = analyze(J, order, omega)
        assert res.tangent_dim == res.classification.tangent_dim


def test_wrong_weight_is_caught():
    order = MonomialOrder.make("lex", 1)
    with pytest.raises(AssertionError):
        build_family(CornerSet.from_corners([(1, 1)], 1, 2), order, WeightVector((1, 5)))

from itertools import combinations
from math import comb

import pytest

from conftest import hp
from hilbstrata.algebra import monomials_of_degree
from hilbstrata.enumeration import CornerSet, brute_force_M, enumerate_M, expansion
from hilbstrata.hilbert import chart_counts
from hilbstrata.orders import MonomialOrder


def test_expansion_examples():
    assert expansion([], 1) == set()
    assert expansion([(2, 0)], 1) == {(3, 0), (2, 1)}
    assert len(expansion([(1, 0, 0, 0), (0, 1, 0, 0)], 3)) == 7


def test_expansion_brute_force():
    corners = [(1, 1, 0), (0, 2, 0)]
    brute = {m for m in monomials_of_degree(3, 3) if any(all(x >= y for x, y in zip(m, c)) for c in corners)}
    assert expansion(corners, 2) == brute


def test_two_points_on_a_line():
    M = enumerate_M(hp("2"), 1)
    assert {J.corners for J in M} == {((2, 0),), ((1, 1),), ((0, 2),)}


@pytest.mark.parametrize("P,n,count", [
    ("2t+2", 3, 159),
    ("t+1", 3, 6),
    ("2t+1", 3, 24),
])
def test_counts(P, n, count):
    assert len(enumerate_M(hp(P), n)) == count


@pytest.mark.parametrize("P,n", [("2t+2", 3), ("2t+1", 3), ("3", 2)])
def test_order_independent_membership(P, n):
    a = {J.corners for J in enumerate_M(hp(P), n, MonomialOrder.make("lex", n))}
    b = {J.corners for J in enumerate_M(hp(P), n, MonomialOrder.make("degrevlex", n))}
    assert a == b


SMALL = [("2", 1), ("3", 1), ("1", 2), ("2", 2), ("3", 2), ("t+1", 2), ("2t+1", 2), ("3t", 2),
         ("t+1", 3), ("2t+1", 3), ("1", 3), ("2", 3)]


@pytest.mark.parametrize("P,n", SMALL)
def test_matches_brute_force(P, n):
    poly = hp(P)
    r = poly.gotzmann
    assert comb(n + r, r) <= 12
    fast = {frozenset(J.corners) for J in enumerate_M(poly, n)}
    assert fast == brute_force_M(poly, n)


def test_brute_force_is_a_real_filter():
    # independent of brute_force_M: count by hand over all subsets
    poly = hp("2t+1")
    cc = chart_counts(poly, 3)
    slice_r = monomials_of_degree(4, 2)
    count = 0
    for c in combinations(slice_r, cc.corners_target):
        mult = {tuple(x + (1 if j == i else 0) for j, x in enumerate(e)) for e in c for i in range(4)}
        count += len(mult) == cc.expansion_target
    assert count == 24


@pytest.mark.parametrize("P,n", [("2t+2", 3), ("4", 2)])
def test_corner_set_invariants(P, n):
    poly = hp(P)
    cc = chart_counts(poly, n)
    for J in enumerate_M(poly, n):
        assert len(J.corners) == cc.corners_target
        assert len(J.delta_r) == cc.delta_r_size == poly(cc.r)
        assert set(J.corners).isdisjoint(J.delta_r)
        assert set(J.corners) | set(J.delta_r) == set(monomials_of_degree(n + 1, cc.r))
        exp = J.expansion()
        assert len(exp) == cc.expansion_target
        assert comb(n + cc.r + 1, cc.r + 1) - len(exp) == poly(cc.r + 1)


def test_sorted_by_key_and_keys_unique():
    order = MonomialOrder.make("degrevlex", 3)
    M = enumerate_M(hp("2t+2"), 3, order)
    keys = [J.key(order) for J in M]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_from_corners_rejects_wrong_degree():
    with pytest.raises(ValueError):
        CornerSet.from_corners([(1, 0), (2, 0)], 1, 2)

import pytest

from conftest import hp
from golden import BETTI_2T1, BETTI_LINES, BETTI_POINTS_P2, HOMOLOGY_2T1
from hilbstrata.orders import MonomialOrder, WeightVector
from hilbstrata.report import NotSmoothError, cell_order, homology_from, verify


def test_betti_two_points_on_a_line(reports):
    rep = reports("2", 1, "lex")
    assert rep.betti == [1, 1, 1]
    assert rep.singular == []


def test_cell_order_example(reports):
    rep = reports("2", 1, "lex")
    assert cell_order(rep, WeightVector((3, 1))) == ["y^2", "xy", "x^2"]
    assert sorted(cell_order(rep)) == sorted(row.key for row in rep.rows)


def test_cell_order_single():
    from hilbstrata.report import decompose
    rep = decompose(hp("1"), 1, MonomialOrder.make("lex", 1))
    assert len(rep.rows) == 2
    assert sorted(cell_order(rep)) == sorted(r.key for r in rep.rows)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_points_in_plane(reports, d):
    rep = reports(str(d), 2, "degrevlex")
    assert rep.betti == BETTI_POINTS_P2[d]
    assert max(r.cell_dim for r in rep.rows) == 2 * d


def test_lines_and_homology(reports):
    rep = reports("t+1", 3, "lex")
    assert rep.betti == BETTI_LINES
    h = homology_from(rep)
    assert h.ranks[0::2] == BETTI_LINES
    assert set(h.ranks[1::2]) == {0}


def test_homology_2t1(reports):
    rep = reports("2t+1", 3, "degrevlex")
    assert rep.betti == BETTI_2T1
    h = homology_from(rep)
    assert h.ranks == HOMOLOGY_2T1
    assert h.group(8) == "Z^4" and h.group(1) == "0" and h.group(16) == "Z"


def test_homology_refuses_singular(reports):
    rep = reports("2t+2", 3, "degrevlex")
    with pytest.raises(NotSmoothError):
        homology_from(rep)


@pytest.mark.parametrize("P,n", [("2", 1), ("3", 2), ("t+1", 3), ("2t+1", 3), ("2t+2", 3)])
def test_count_conservation(reports, P, n):
    for kind in ("lex", "degrevlex"):
        rep = reports(P, n, kind)
        assert sum(rep.betti) + len(rep.singular) == len(rep.rows)
        assert len(rep.betti) == max(r.tangent_dim for r in rep.rows) + 1


def test_json_schema(reports):
    rep = reports("2", 1, "lex")
    doc = rep.to_json()
    assert list(doc) == ["P", "n", "order", "omega", "ideals", "betti", "singular"]
    assert doc["P"] == "2" and doc["n"] == 1 and doc["order"] == "lex"
    for ideal in doc["ideals"]:
        assert list(ideal) == ["key", "generators", "tangent_dim", "verdict", "cell_dim"]
        assert ideal["verdict"] in ("cell", "singular")


def test_csv_columns(reports):
    lines = reports("2", 1, "lex").render_csv().splitlines()
    assert lines[0] == "key,tangent_dim,verdict,cell_dim"
    assert len(lines) == 4


def test_verify_small():
    rows = verify(hp("2t+1"), 3, MonomialOrder.make("lex", 3), seed=0, points=2)
    assert len(rows) == 24
    assert all(r.agree == r.points == 2 for r in rows)

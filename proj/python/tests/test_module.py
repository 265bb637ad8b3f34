import pytest

import bruhat


def test_named_elements():
    assert bruhat.theta(0, 0).word == "121"
    assert bruhat.theta(1, 1).length == 7
    assert bruhat.Elt("theta-s 2 2").name == "theta_s(2,2)"
    assert bruhat.identity.length == 0


def test_lower_cardinalities():
    assert bruhat.lower_cardinality(bruhat.theta(1, 1)) == 42
    assert bruhat.lower_cardinality(bruhat.x(4)) == 14
    assert bruhat.lower_cardinality("x 6") == 30


def test_order_and_intervals():
    y = bruhat.theta(1, 1)
    elems = bruhat.interval(bruhat.identity, y)
    assert len(elems) == 42
    assert all(z <= y for z in elems)
    assert sum(bruhat.lc(bruhat.identity, y)) == 42
    assert bruhat.lc(bruhat.identity, bruhat.theta(0, 0)) == [1, 2, 2, 1]


def test_kl():
    assert bruhat.kl(bruhat.theta(0, 0), bruhat.theta(1, 1)) == ([1, 1], "closed-theta")
    coeffs, _ = bruhat.kl(bruhat.theta_s(1, 1), bruhat.theta_s(2, 2))
    assert coeffs == [1, 2]


def test_translations():
    r = bruhat.translate_interval(bruhat.theta_s(1, 0), bruhat.theta_s(3, 1), 5, 1)
    assert r["poset_iso"]
    assert bruhat.stabilization_n0(bruhat.theta(0, 0), bruhat.theta(4, 4), 1, 0) == 3


def test_sweep_reports():
    r = bruhat.conjecture_e_sweep("B2", 8, 4)
    assert r["ok"] and r["group"] == "B2aff"
    assert bruhat.lower_classification_sweep(6)["ok"]


def test_generic_ball():
    b = bruhat.Ball("A2", 4)
    assert len(b) == 1 + 3 + 6 + 9 + 12
    i, j = b.index("1"), b.index("121")
    assert b.leq(i, j) and not b.leq(j, i)
    with pytest.raises(bruhat.OutOfBallError):
        b.index("12012012")


def test_svg():
    doc = bruhat.svg.star(bruhat.theta(0, 0))
    assert doc.startswith("<?xml") and doc.rstrip().endswith("</svg>")
    assert bruhat.svg.zones(12) == bruhat.svg.zones(12)

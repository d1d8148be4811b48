from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centralfiring.rootsys import (
    Root,
    RootSystemType,
    add_root,
    build,
    classical_coords,
    dominant,
    dominant_rep,
    from_classical_coords,
    in_root_lattice,
    is_dominant,
    minuscule_rep_of_class,
    orbit,
    pairing,
    parse_weight,
    permutohedron_contains,
    reflect_simple,
    supported_types,
)
from strategies import root_systems, weights


def test_a2_cartan_and_roots():
    rs = build("A2")
    assert [list(r) for r in rs.cartan] == [[2, -1], [-1, 2]]
    assert rs.sym == (1, 1)
    assert sorted(a.simple_coords for a in rs.positive_roots) == [(0, 1), (1, 0), (1, 1)]


def test_g2_off_diagonal_and_count():
    rs = build("G2")
    assert {rs.cartan[0][1], rs.cartan[1][0]} == {-1, -3}
    assert len(rs.positive_roots) == 6
    assert rs.sym == (1, 3)


def test_e8_highest_root_is_omega8():
    rs = build("E8")
    assert len(rs.positive_roots) == 120
    assert rs.highest_root.weight_image == (0, 0, 0, 0, 0, 0, 0, 1)


def test_e8_root_count_matches_orbit_of_simple_roots():
    # simply laced: all roots form the Weyl orbit of alpha_1
    rs = build("E7")
    assert len(orbit(rs, rs.simple_root(1).weight_image)) == 2 * len(rs.positive_roots)


@pytest.mark.parametrize("text", ["A0", "B1", "E5", "F3", "X2", "E9"])
def test_bad_types_rejected(text):
    with pytest.raises(ValueError):
        RootSystemType.parse(text)


def test_pairing_examples():
    a2 = build("A2")
    assert pairing(a2, (1, 0), a2.root((0, 1))) == 0
    assert pairing(a2, (1, 1), a2.root((1, 1))) == 2
    b2 = build("B2")
    assert b2.root((1, 0)).length2 == 4  # alpha_1 is long in B2
    assert pairing(b2, (0, 1), b2.root((1, 0))) == 0


def test_add_root_examples():
    rs = build("A2")
    assert add_root(rs, (0, 0), rs.root((1, 0))) == (2, -1)
    assert add_root(rs, (1, 0), rs.root((0, 1))) == (0, 2)


def test_zero_root_rejected():
    with pytest.raises(ValueError):
        Root((0, 0), (0, 0), 2)
    with pytest.raises(ValueError):
        build("A2").root((1, -1))


def test_reflection_examples():
    rs = build("A2")
    assert reflect_simple(rs, (-1, 0), 1) == (1, -1)
    for t in ["B3", "G2", "E6"]:
        rs = build(t)
        for i in range(1, rs.rank + 1):
            img = reflect_simple(rs, rs.rho, i)
            assert img[i - 1] == -1
            assert img == tuple(r - a for r, a in zip(rs.rho, rs.simple_root(i).weight_image))


@given(st.data())
def test_reflection_is_involution(data):
    rs = data.draw(root_systems())
    lam = data.draw(weights(rs))
    i = data.draw(st.integers(1, rs.rank))
    assert reflect_simple(rs, reflect_simple(rs, lam, i), i) == lam


@given(st.data())
def test_dominant_rep_is_in_orbit_and_unique(data):
    rs = data.draw(root_systems(["A2", "B2", "G2", "A3", "C3"]))
    lam = data.draw(weights(rs, -2, 2))
    rep, word = dominant_rep(rs, lam)
    orb = orbit(rs, lam)
    assert rep in orb
    assert [v for v in orb if is_dominant(v)] == [rep]
    cur = lam
    for i in word:
        cur = reflect_simple(rs, cur, i)
    assert cur == rep


def test_dominant_examples():
    rs = build("A2")
    assert dominant(rs, (-1, 0)) == (0, 1)
    assert dominant_rep(rs, (2, 1)) == ((2, 1), [])
    b2 = build("B2")
    assert len(orbit(b2, (1, 1))) == 8
    assert dominant(b2, (0, -1)) == (0, 1)


def test_root_lattice_membership():
    rs = build("A2")
    assert in_root_lattice(rs, (1, 1))
    assert not in_root_lattice(rs, (1, 0))
    for t in supported_types(5):
        assert in_root_lattice(build(t), (0,) * t.rank)


def test_permutohedron_examples():
    rs = build("A2")
    assert permutohedron_contains(rs, (1, 1), (0, 0))
    assert permutohedron_contains(rs, (1, 1), (0, 0), strict=True)
    assert not permutohedron_contains(rs, (1, 1), (1, 1), strict=True)
    assert not permutohedron_contains(rs, (1, 1), (1, 0))  # wrong class
    # -rho lies on the boundary, not in the interior
    assert permutohedron_contains(rs, (1, 1), (-1, -1))
    assert not permutohedron_contains(rs, (1, 1), (-1, -1), strict=True)


@given(st.data())
def test_permutohedron_is_w_invariant(data):
    rs = data.draw(root_systems(["A2", "B2", "A3", "G2"]))
    lam = data.draw(weights(rs, 0, 3))
    mu = data.draw(weights(rs, -3, 3))
    i = data.draw(st.integers(1, rs.rank))
    for strict in (False, True):
        assert (permutohedron_contains(rs, lam, mu, strict)
                == permutohedron_contains(rs, lam, reflect_simple(rs, mu, i), strict))


def test_minuscule_class_examples():
    assert minuscule_rep_of_class(build("A2"), (1, 0)) == (1, 0)
    assert minuscule_rep_of_class(build("A2"), (1, 1)) == (0, 0)
    assert minuscule_rep_of_class(build("A3"), (1, 1, 1)) == (0, 1, 0)


def test_classical_coordinates():
    assert classical_coords(build("B2"), (0, 1)) == (Fraction(1, 2), Fraction(1, 2))
    assert classical_coords(build("C3"), (0, 0, 1)) == (1, 1, 1)
    assert classical_coords(build("A1"), (1,)) == (Fraction(1, 2), Fraction(-1, 2))


@given(st.data())
def test_classical_round_trip(data):
    rs = data.draw(root_systems(["A1", "A3", "B2", "B4", "C3", "D4", "D5"]))
    lam = data.draw(weights(rs))
    assert from_classical_coords(rs, classical_coords(rs, lam)) == lam


def test_parse_weight():
    rs = build("A3")
    assert parse_weight(rs, "0") == (0, 0, 0)
    assert parse_weight(rs, "w2") == (0, 1, 0)
    assert parse_weight(rs, "1,0,-2") == (1, 0, -2)
    with pytest.raises(ValueError):
        parse_weight(rs, "w4")
    with pytest.raises(ValueError):
        parse_weight(rs, "1,2")

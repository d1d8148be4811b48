import pytest

from centralfiring.rootsys import RootSystemType, build
from centralfiring.folding import (
    InvalidFolding,
    confluence_propagation_check,
    connectedness_propagation,
    fold,
    folded_fire_decomposes,
    fundamental_weights_pair_kronecker,
    parse_sigma,
    sigma_fixed,
)

CASES = [("A3", "(1 3)", "B2"), ("A5", "(1 5)(2 4)", "B3"), ("D4", "(1 3 4)", "G2"),
         ("D5", "(4 5)", "C4"), ("E6", "(1 6)(3 5)", "F4")]


@pytest.mark.parametrize("src,sigma,tgt", CASES)
def test_targets_and_cartan(src, sigma, tgt):
    rs = build(src)
    f = fold(rs, parse_sigma(sigma, rs.rank))
    assert str(f.target) == tgt
    assert [list(r) for r in f.folded_cartan] == [list(r) for r in build(tgt).cartan]
    assert fundamental_weights_pair_kronecker(rs, f)


def test_orbit_tables():
    a3 = build("A3")
    assert fold(a3, (3, 2, 1)).orbits == ((1, 3), (2,))
    d4 = build("D4")
    assert fold(d4, parse_sigma("(1 3 4)", 4)).orbits == ((2,), (1, 3, 4))
    e6 = build("E6")
    assert fold(e6, parse_sigma("(1 6)(3 5)", 6)).orbits == ((1, 6), (3, 5), (4,), (2,))


def test_identity_folding():
    for t in ["A3", "D4", "E6"]:
        rs = build(t)
        f = fold(rs, parse_sigma("id", rs.rank))
        assert f.target == rs.type


def test_invalid_foldings():
    with pytest.raises(InvalidFolding):
        fold(build("A4"), parse_sigma("(1 4)(2 3)", 4))  # 2 <-> 3 are neighbours
    with pytest.raises(InvalidFolding):
        fold(build("A3"), parse_sigma("(1 2)", 3))
    with pytest.raises(InvalidFolding):
        fold(build("B3"), parse_sigma("id", 3))
    with pytest.raises(InvalidFolding):
        parse_sigma("(1 2)(2 3)", 3)


def test_sigma_fixed_examples():
    a3 = build("A3")
    s = (3, 2, 1)
    assert sigma_fixed(a3, s, (1, 1, 1))
    assert not sigma_fixed(a3, s, (1, 0, 0))
    assert sigma_fixed(a3, s, (0, 1, 0))


@pytest.mark.parametrize("src,sigma,tgt", CASES)
def test_folded_moves_decompose_at_zero(src, sigma, tgt):
    rs = build(src)
    f = fold(rs, parse_sigma(sigma, rs.rank))
    for beta in build(tgt).positive_roots:
        assert folded_fire_decomposes(rs, f, (0,) * rs.rank, beta)


def test_folded_move_preconditions():
    a3 = build("A3")
    f = fold(a3, (3, 2, 1))
    b2 = build("B2")
    assert folded_fire_decomposes(a3, f, (0, 0, 0), b2.root((1, 0)))
    assert folded_fire_decomposes(a3, f, (0, 0, 0), b2.root((0, 1)))  # singleton orbit
    with pytest.raises(ValueError):
        folded_fire_decomposes(a3, f, (1, 0, 1), b2.root((1, 0)))
    with pytest.raises(ValueError):
        folded_fire_decomposes(a3, f, (1, 0, 0), b2.root((0, 1)))


def test_propagation_reports():
    a3 = build("A3")
    f = fold(a3, (3, 2, 1))
    r0 = confluence_propagation_check(a3, f, (0, 0, 0))
    assert r0.source_confluent and r0.target_confluent
    r2 = confluence_propagation_check(a3, f, (0, 1, 0))
    assert not r2.source_confluent and r2.target_confluent and r2.converse_fails
    rid = confluence_propagation_check(a3, fold(a3, (1, 2, 3)), (0, 0, 0))
    assert rid.source_stable == rid.target_stable


def test_connectedness_propagates_from_b2_to_a3():
    a3 = build("A3")
    f = fold(a3, (3, 2, 1))
    for x in range(-3, 4):
        for y in range(-3, 4):
            tgt, src = connectedness_propagation(a3, f, (x, y, x))
            assert src or not tgt

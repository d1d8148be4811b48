from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from centralfiring.rootsys import build
from centralfiring.unlabeled import OrbitWeight, orbit_normal_form
from centralfiring.chips import (
    SUM_DELTA,
    ChipConfig,
    ChipMoveError,
    Move,
    UnlabeledConfig,
    apply_move,
    chip_firing_matches_central,
    chips_to_weight,
    dominance_compare,
    legal_moves,
    pseudo_stabilization,
    reachable_configs,
    render,
    split_never_crossed,
    stabilize_unlabeled_typeA,
    typeA_config_of,
    typeA_weight_of,
    weight_to_chips,
)

V11 = UnlabeledConfig((8, 8, 8, 8, 4, 3, 3, 0, 0, 0, 0))


def pos(*xs):
    return ChipConfig.from_positions(xs)


def test_move_a_example():
    out = apply_move(pos(0, 0, 0, 0), Move("A", 1, 3))
    assert out == pos(1, 0, -1, 0)


def test_move_errors_carry_indices():
    with pytest.raises(ChipMoveError) as e:
        apply_move(pos(0.5, 0.5), Move("B", 2))
    assert e.value.indices == (2,)
    with pytest.raises(ChipMoveError) as e:
        apply_move(pos(0, 1), Move("A", 1, 2))
    assert e.value.indices == (1, 2)
    with pytest.raises(ChipMoveError):
        apply_move(pos(0, 0), Move("A", 2, 1))


def test_move_d_at_zero():
    assert apply_move(pos(0, 0), Move("D", 1, 2)) == pos(1, 1)


def test_mixed_parity_rejected():
    with pytest.raises(ValueError):
        pos(0, 0.5)


def test_legal_moves_examples():
    assert legal_moves("A", pos(3, 1, 0, -2)) == []
    c = legal_moves("C", pos(0))
    assert Move("C", 1) in c and Move("B", 1) not in c
    assert Move("D", 1, 2) in legal_moves("D", pos(1, -1))
    with pytest.raises(ValueError):
        legal_moves("E", pos(0))


@given(st.sampled_from("ABCD"), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_sum_deltas(family, xs):
    cfg = pos(*xs)
    for m in legal_moves(family, cfg):
        delta = sum(apply_move(cfg, m).positions) - sum(cfg.positions)
        assert delta == 2 * SUM_DELTA[m.kind]


@given(st.sampled_from("BCD"), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_half_integer_configs_never_use_b_or_c(family, xs):
    cfg = ChipConfig(tuple(2 * x + 1 for x in xs))
    assert all(m.kind in "AD" for m in legal_moves(family, cfg))


def test_b_and_d_graphs_coincide_from_omega_n():
    for n in (3, 4):
        b, d = build(f"B{n}"), build(f"D{n}")
        start_b = weight_to_chips(b, b.fundamental_weights[n - 1])
        start_d = weight_to_chips(d, d.fundamental_weights[n - 1])
        assert start_b == start_d
        assert reachable_configs("B", start_b) == reachable_configs("D", start_d)


def test_fundamental_weight_configurations():
    assert weight_to_chips(build("B5"), (0, 0, 0, 0, 1)) == pos(*[0.5] * 5)
    assert weight_to_chips(build("D5"), (0, 0, 0, 1, 0)) == pos(0.5, 0.5, 0.5, 0.5, -0.5)
    assert weight_to_chips(build("A6"), (0, 0, 1, 0, 0, 0)) == pos(1, 1, 1, 0, 0, 0, 0)
    assert weight_to_chips(build("C3"), (0, 0, 1)) == pos(1, 1, 1)


@given(st.sampled_from(["A2", "A4", "B3", "C3", "D4"]), st.data())
def test_weight_chip_round_trip(t, data):
    rs = build(t)
    lam = data.draw(st.tuples(*[st.integers(-3, 3)] * rs.rank))
    assert chips_to_weight(rs, weight_to_chips(rs, lam)) == lam


@pytest.mark.parametrize("t,lam", [("A2", (0, 0)), ("B2", (0, 1)), ("C2", (1, 0)), ("C3", (0, 0, 0)),
                                   ("D3", (1, 0, 0)), ("D4", (0, 0, 0, 0)), ("B3", (0, 0, 1))])
def test_chip_graph_matches_central(t, lam):
    assert chip_firing_matches_central(build(t), lam)


def test_d3_matches_a3_relabeled():
    # D3 nodes (1,2,3) are A3 nodes (2,1,3)
    d3, a3 = build("D3"), build("A3")
    perm = (1, 0, 2)
    d3_configs = reachable_configs("D", weight_to_chips(d3, (1, 0, 0)))
    d3_weights = {chips_to_weight(d3, c) for c in d3_configs}
    a3_configs = reachable_configs("A", weight_to_chips(a3, (0, 1, 0)))
    a3_weights = {tuple(w[p] for p in perm) for w in (chips_to_weight(a3, c) for c in a3_configs)}
    assert d3_weights == a3_weights


def test_a2_from_zero_has_four_configurations():
    assert len(reachable_configs("A", weight_to_chips(build("A2"), (0, 0)))) == 4


def test_pseudo_stabilization_examples():
    assert pseudo_stabilization(V11).positions == (9, 8, 7, 6, 5, 4, 3, 2, 1, -1, -2)
    assert pseudo_stabilization(UnlabeledConfig((8, 8, 8, 8))).positions == (10, 9, 7, 6)
    s = UnlabeledConfig((4, 3, 2, 1))
    assert pseudo_stabilization(s) == s


def test_dominance_examples():
    p = pseudo_stabilization(V11)
    assert V11.partial_sums()[:4] == (8, 16, 24, 32)
    assert p.partial_sums()[:4] == (9, 17, 24, 30)
    assert dominance_compare(V11, p) == "neither"
    assert dominance_compare(p, p) == "below"
    v = UnlabeledConfig((8, 8, 8, 8))
    assert dominance_compare(v, pseudo_stabilization(v)) == "strictly_below"
    with pytest.raises(ValueError):
        dominance_compare(v, UnlabeledConfig((8, 8, 8, 7)))


def test_stabilization_examples():
    assert stabilize_unlabeled_typeA(V11).positions == (10, 9, 7, 6, 5, 4, 3, 1, 0, -1, -2)
    assert stabilize_unlabeled_typeA(UnlabeledConfig((0, 0, 0, 0))).positions == (2, 1, -1, -2)
    assert stabilize_unlabeled_typeA(UnlabeledConfig((5,))).positions == (5,)


@pytest.mark.parametrize("n", range(2, 7))
def test_stabilization_matches_orbit_oracle(n):
    rs = build(f"A{n - 1}")
    for xs in combinations_with_replacement(range(-3, 4), n):
        v = UnlabeledConfig.of(xs)
        mu = orbit_normal_form(rs, OrbitWeight(typeA_weight_of(v))).rep
        assert stabilize_unlabeled_typeA(v) == typeA_config_of(mu, v.total)


@pytest.mark.parametrize("n", range(2, 8))
def test_split_is_never_crossed(n):
    for xs in combinations_with_replacement(range(-2, 3), n):
        v = UnlabeledConfig.of(xs)
        if dominance_compare(v, pseudo_stabilization(v)) != "strictly_below":
            assert split_never_crossed(v)


def test_render_and_json():
    text = render(pos(1, 0, -1, 0))
    assert text.splitlines()[-1].split() == ["-1", "0", "1"]
    assert "4" in text.splitlines()[0]
    assert pos(0.5, -0.5).to_json() == {"positions": [0.5, -0.5], "half": True}
    assert pos(1, 0).to_json() == {"positions": [1, 0], "half": False}

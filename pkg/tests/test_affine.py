import pytest
from hypothesis import given, settings, strategies as st

from levelrank.abacus import beta_set, big_upsilon, render_abacus, upsilon
from levelrank.affine import (AffinePermutation, act_on_abacus, act_on_charged,
                              act_on_charges, compose, enumerate_bounded, invert,
                              parse_affine)
from levelrank.errors import DimensionError, EnumerationLimitError, ParseError
from levelrank.partition import Partition

import worked_examples as pd
from strategies import charged

W3 = AffinePermutation((2, 0, -1), (2, 0, 1))
W4 = AffinePermutation((1, 0, 0, -1), (1, 0, 3, 2))
P53 = Partition((5, 3))


@st.composite
def affine(draw, m, bound=4):
    perm = draw(st.permutations(list(range(m))))
    shifts = draw(st.lists(st.integers(-bound, bound), min_size=m, max_size=m))
    return AffinePermutation(tuple(shifts), tuple(perm))


def test_parse_affine():
    assert parse_affine("(2,0,-1)∘[201]") == W3
    assert parse_affine("(1, 0, 0, -1) o [1032]") == W4
    assert parse_affine("(0,0)∘[1,0]") == AffinePermutation((0, 0), (1, 0))
    assert parse_affine(str(W4)) == W4
    for bad in ("(1,0)[10]", "(1,0)∘[11]", "(1)∘[01]", "(a,0)∘[10]"):
        with pytest.raises((ParseError, ValueError)):
            parse_affine(bad)


def test_json_round_trip():
    for w in (W3, W4):
        assert AffinePermutation.from_json(w.to_json()) == w


def test_act_on_charges_examples():
    assert act_on_charges(W3, (0, 0, 1)) == (3, 0, -1)
    assert act_on_charges(W4, (0, 0, 1, 1)) == (1, 0, 1, 0)
    assert act_on_charges(AffinePermutation.identity(3), (4, -1, 2)) == (4, -1, 2)
    with pytest.raises(DimensionError):
        act_on_charges(W3, (0, 0))


def test_witnesses_move_final_example_abaci(golden):
    left = upsilon(4, beta_set(P53, 2))
    right = upsilon(3, beta_set(P53, 1))
    assert left == pd.abacus_from_diagram(pd.GL8_LEFT_4ABACUS)
    assert right == pd.abacus_from_diagram(pd.GL8_RIGHT_3ABACUS)
    golden("gl8_left_4abacus.txt", render_abacus(left, (-3, 1)))
    golden("gl8_right_3abacus.txt", render_abacus(right, (-4, 1)))
    assert act_on_abacus(W4, left) == pd.abacus_from_diagram(pd.EX12_4ABACUS)
    assert act_on_abacus(W3, right) == pd.abacus_from_diagram(pd.EX11_3ABACUS)


def test_identity_acts_trivially():
    a = upsilon(3, beta_set(Partition((8, 6, 1)), 2))
    assert act_on_abacus(AffinePermutation.identity(3), a) == a


def test_compose_and_invert_examples():
    for w in (W3, W4):
        e = AffinePermutation.identity(w.m)
        assert compose(w, e) == w == compose(e, w)
        assert compose(w, invert(w)) == e == compose(invert(w), w)
    assert invert(AffinePermutation.identity(2)) == AffinePermutation.identity(2)
    s = (0, 0, 1)
    assert act_on_charges(compose(W3, W3), s) == act_on_charges(W3, act_on_charges(W3, s))
    with pytest.raises(DimensionError):
        compose(W3, W4)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(affine(m), affine(m), affine(m), charged(m))))
def test_group_action_laws(args):
    w1, w2, w3, cm = args
    assert compose(compose(w1, w2), w3) == compose(w1, compose(w2, w3))
    lhs = act_on_charges(compose(w1, w2), cm.charges)
    assert lhs == act_on_charges(w1, act_on_charges(w2, cm.charges))
    a = cm.abacus()
    assert act_on_abacus(compose(w1, w2), a) == act_on_abacus(w1, act_on_abacus(w2, a))
    # the abacus action and the charged-multipartition action agree
    assert act_on_abacus(w1, a).charged() == act_on_charged(w1, cm)
    assert act_on_abacus(w1, a).charges == act_on_charges(w1, cm.charges)
    assert act_on_abacus(invert(w1), act_on_abacus(w1, a)) == a


def test_enumerate_bounded():
    assert enumerate_bounded(1, 0) == [AffinePermutation.identity(1)]
    assert len(enumerate_bounded(2, 0)) == 2
    els = enumerate_bounded(2, 1)
    assert len(els) == 18 and len(set(els)) == 18
    assert all(w.norm <= 1 for w in els)
    assert els == sorted(els, key=lambda w: (w.perm, w.shifts))
    with pytest.raises(EnumerationLimitError):
        enumerate_bounded(4, 4, limit=1000)


def test_action_on_charged_keeps_partitions():
    cm = big_upsilon(3, P53, 1)
    out = act_on_charged(W3, cm)
    assert out.charges == (3, 0, -1)
    assert sorted(out.components) == sorted(cm.components)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moperadkit import chords
from moperadkit.chords import (PaCDContext, cd_compose, cd_inverse, cd_mop_compose_0, cd_mop_compose_i,
                               cd_morphism, payload_algebra, pacd_mop_compose_i)
from moperadkit.graded_lie import LieElement
from moperadkit.pab import parse_object
from moperadkit.uea import exp


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("tag", chords.CD_TAGS)
def test_relations_hold(tag, N):
    r = chords.check_cd_relation(tag, N, 3)
    assert r["status"] == "pass", r["details"]


@pytest.mark.parametrize("N", [1, 2])
def test_inner_k_split_needs_the_h_terms(N):
    lhs, rhs = chords.cd_relation_sides("K-split-inner", N, 3)
    c = PaCDContext((1, 2), N, 3)
    o2 = c.obj("(0 (1_0 2_0))")
    b1 = c.b(o2, (0,), (1,), (2,), -1)
    term1 = b1 * c.K(b1.tgt, (0,), (1,)) * b1.inverse()
    x1 = c.X(o2, (1,), (2,))
    conj = x1 * c.b(x1.tgt, (0,), (2,), (1,), -1)
    term2 = conj * c.K(conj.tgt, (0,), (2,)) * conj.inverse()
    assert lhs == rhs
    assert lhs != term1 + term2


def test_l_power_below_the_order_moves_labels():
    c = PaCDContext((1,), 3, 3)
    o = c.obj("(0 1_0)")
    assert c.Lpow(o, (1,), 3) == c.identity(o)
    assert c.Lpow(o, (1,), 2).tgt != o


def payloads(N, n=2, D=3):
    h = payload_algebra(tuple(range(1, n + 1)), N, D)
    coords = st.dictionaries(st.integers(0, h.size - 1), st.integers(-2, 2), max_size=3)
    return coords.map(lambda c: exp(LieElement(h, c)).u)


def shifts(N, n=2):
    return st.lists(st.integers(0, N - 1), min_size=n, max_size=n).map(lambda v: dict(zip(range(1, n + 1), v)))


def chain(N, data):
    """Three composable morphisms with random payloads and shifts."""
    lab = data.draw(shifts(N))
    out = []
    for _ in range(3):
        f = cd_morphism(lab, data.draw(shifts(N)), data.draw(payloads(N)))
        out.append(f)
        lab = dict(f.tgt_labels)
    return out


@given(st.integers(1, 3), st.data())
def test_crossed_product_is_associative(N, data):
    f, g, h = chain(N, data)
    assert cd_compose(cd_compose(f, g), h) == cd_compose(f, cd_compose(g, h))


@given(st.integers(1, 3), st.data())
def test_crossed_product_inverse(N, data):
    f, _, _ = chain(N, data)
    ident = cd_compose(f, cd_inverse(f))
    assert ident.u == ident.u.one(ident.u.handle) and not ident.shift_dict()


def test_label_mismatch_rejected():
    h = payload_algebra((1,), 2, 2)
    f = cd_morphism({1: 0}, {1: 1}, exp(h.zero()).u)
    with pytest.raises(ValueError):
        cd_compose(f, f.__class__(((1, 0),), ((1, 0),), f.u))


@given(st.integers(1, 3), st.data())
def test_insertion_is_functorial(N, data):
    f, g, _ = chain(N, data)
    fg = cd_compose(f, g)
    assert cd_mop_compose_i(fg, 1, (5, 6)) == cd_compose(cd_mop_compose_i(f, 1, (5, 6)), cd_mop_compose_i(g, 1, (5, 6)))
    inner = {7: data.draw(st.integers(0, N - 1))}
    assert cd_mop_compose_0(fg, inner) == cd_compose(cd_mop_compose_0(f, inner), cd_mop_compose_0(g, inner))


def test_parenthesized_insertion_respects_composition():
    c = PaCDContext((1, 2, 3), 2, 3)
    o = c.obj("((0 1_0) (2_1 3_0))")
    f = c.X(o, (2,), (3,))
    g = c.X(f.tgt, (3,), (2,))
    inner = parse_object("(1 2)")
    lhs = pacd_mop_compose_i(f * g, 2, inner)
    assert lhs == pacd_mop_compose_i(f, 2, inner) * pacd_mop_compose_i(g, 2, inner)
    assert str(lhs.src) == "((0 1_0) ((2_1 3_1) 4_0))"


def test_pacd_rejects_wrong_labels():
    c = PaCDContext((1,), 2, 2)
    f = c.identity("(0 1_0)")
    with pytest.raises(ValueError):
        chords.PaCDMorphism(parse_object("(0 1_1)", 2), f.tgt, f.payload)

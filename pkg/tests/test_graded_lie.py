import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moperadkit.freelie import witt
from moperadkit.graded_lie import (LieElement, LieMorphism, bracket, build_algebra, central_element,
                                   element_from_json, element_to_json, embed, free_presentation, gamma_act,
                                   mop_compose_0, mop_compose_i, relabel, t0, t_presentation, tgamma_presentation,
                                   tij)


def tg(n, N, D):
    return build_algebra(tgamma_presentation(tuple(range(1, n + 1)), N), D)


def semidirect_dims(n, N, D):
    # frozen algebra on 1..n: free on t0k, t^a_ik (i<k) stacked over the algebra on 1..k-1
    return [sum(witt(1 + N * (k - 1), d) for k in range(1, n + 1)) for d in range(1, D + 1)]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_two_strand_dims(N):
    h = tg(2, N, 5)
    assert h.dims() == [(d == 1) + witt(N + 1, d) for d in range(1, 6)]


@pytest.mark.parametrize("n,N", [(1, 2), (2, 2), (3, 1), (3, 2)])
def test_dims_match_semidirect_oracle(n, N):
    assert tg(n, N, 4).dims() == semidirect_dims(n, N, 4)


def test_classical_dims():
    # t_n = free(n-1) stacked over t_{n-1}
    h = build_algebra(t_presentation((1, 2, 3, 4)), 4)
    assert h.dims() == [sum(witt(k, d) for k in range(1, 4)) for d in range(1, 5)]


def test_frozen_dims_frozen_values():
    assert tg(2, 2, 4).dims() == [4, 3, 8, 18]
    assert tg(2, 3, 3).dims() == [5, 6, 20]


@pytest.mark.parametrize("n,N", [(1, 1), (2, 2), (3, 2), (3, 3)])
def test_central_element(n, N):
    h = tg(n, N, 3)
    c = central_element(h)
    for k in range(h.size):
        assert bracket(c, h.basis_element(k)).is_zero()


def test_central_element_rejected_for_free():
    with pytest.raises(ValueError):
        central_element(build_algebra(free_presentation(("x", "y")), 2))


def elements(h):
    idx = st.integers(0, h.size - 1)
    return st.dictionaries(idx, st.integers(-3, 3), max_size=4).map(lambda c: LieElement(h, c))


H = tg(2, 2, 4)


@given(elements(H), elements(H), elements(H))
def test_jacobi_and_antisymmetry(a, b, c):
    assert bracket(a, b) == -bracket(b, a)
    assert (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero()


@given(elements(H), elements(H), st.integers(-3, 3))
def test_bracket_bilinear(a, b, s):
    assert bracket(a * s + b, b) == bracket(a, b) * s


def test_morphism_rejects_bad_images():
    h = build_algebra(t_presentation((1, 2, 3)), 3)
    g = {x.name(): h.gen(x) for x in h.presentation.generators}
    ok = LieMorphism(h, h, g)
    assert ok(h.basis_element(5)) == h.basis_element(5)
    bad = dict(g)
    bad[tij(2, 3, 0, 1).name()] = h.zero()
    with pytest.raises(ValueError):
        LieMorphism(h, h, bad)


def test_json_round_trip():
    h = tg(2, 2, 3)
    a = LieElement(h, {0: Fraction(1, 3), 5: -2, h.size - 1: 7})
    obj = json.loads(json.dumps(element_to_json(a)))
    assert element_from_json(h, obj) == a
    with pytest.raises(ValueError):
        element_from_json(tg(2, 3, 3), obj)


@given(st.lists(st.integers(0, 2), min_size=2, max_size=2), st.lists(st.integers(0, 2), min_size=2, max_size=2),
       elements(tg(2, 3, 3)))
def test_gamma_action_is_a_group_action(u, v, a):
    gu, gv = dict(zip((1, 2), u)), dict(zip((1, 2), v))
    both = {s: gu[s] + gv[s] for s in (1, 2)}
    assert gamma_act(gu, gamma_act(gv, a)) == gamma_act(both, a)
    assert gamma_act({1: 1, 2: 1}, a) == a


def test_gamma_shifts_labels():
    h = tg(2, 3, 2)
    assert gamma_act({1: 1}, h.gen(tij(1, 2, 0, 3))) == h.gen(tij(1, 2, 1, 3))
    assert gamma_act({2: 1}, h.gen(tij(1, 2, 0, 3))) == h.gen(tij(1, 2, 2, 3))
    assert gamma_act({1: 2}, h.gen(t0(1))) == h.gen(t0(1))


def test_insertion_on_generators():
    h = tg(1, 2, 2)
    x = mop_compose_i(h.gen(t0(1)), 1, (5, 6))
    tgt = x.handle
    expect = tgt.gen(t0(5)) + tgt.gen(t0(6)) + tgt.gen(tij(5, 6, 0, 2)) + tgt.gen(tij(5, 6, 1, 2))
    assert x == expect
    y = mop_compose_0(h.gen(t0(1)), (7,))
    tgt = y.handle
    assert y == tgt.gen(t0(1)) + tgt.gen(tij(7, 1, 0, 2)) + tgt.gen(tij(7, 1, 1, 2))


def test_insertion_name_clash():
    h = tg(2, 1, 2)
    with pytest.raises(ValueError):
        mop_compose_i(h.gen(t0(1)), 1, (2, 3))
    with pytest.raises(ValueError):
        mop_compose_0(h.gen(t0(1)), (1,))


@given(elements(tg(2, 2, 3)))
def test_relabel_round_trip(a):
    b = relabel(a, {1: 7, 2: 4})
    assert relabel(b, {7: 1, 4: 2}) == a


def test_embed_preserves_brackets():
    h = tg(2, 2, 3)
    a, b = h.gen(t0(1)), h.gen(tij(1, 2, 1, 2))
    assert embed(bracket(a, b), (1, 2, 3)) == bracket(embed(a, (1, 2, 3)), embed(b, (1, 2, 3)))

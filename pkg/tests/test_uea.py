from fractions import Fraction

from hypothesis import given, strategies as st

from moperadkit.graded_lie import LieElement, bracket
from moperadkit.uea import Ad, GroupLikeElement, exp, f2, kernel_embed_phiN, kernel_free, log, power

h4 = f2(4)
x, y = h4.gen("x"), h4.gen("y")


def lie_elements(h, D=None):
    idx = st.integers(0, h.size - 1)
    return st.dictionaries(idx, st.integers(-3, 3).map(lambda v: Fraction(v, 2)), max_size=4).map(
        lambda c: LieElement(h, c))


def test_bch_through_degree_three():
    z = log(exp(x) * exp(y))
    xy = bracket(x, y)
    expect = x + y + xy * Fraction(1, 2) + bracket(x, xy) * Fraction(1, 12) - bracket(y, xy) * Fraction(1, 12)
    assert z.truncate(3) == expect.truncate(3)


def test_bch_degree_four_term():
    # the only degree-4 BCH term is -1/24 [y,[x,[x,y]]]
    z = log(exp(x) * exp(y))
    assert z.component(4) == bracket(y, bracket(x, bracket(x, y))) * Fraction(-1, 24)


@given(lie_elements(h4))
def test_exp_log_round_trip(a):
    assert log(exp(a)) == a


@given(lie_elements(h4), lie_elements(h4))
def test_group_inverse(a, b):
    g = exp(a) * exp(b)
    assert (g * g.inverse()).is_one()
    assert g.is_grouplike()


@given(lie_elements(h4), st.integers(-3, 3), st.integers(-3, 3))
def test_powers_add(a, p, q):
    g = exp(a)
    assert power(g, p) * power(g, q) == power(g, p + q)


def test_adjoint_is_exp_ad():
    expect = y + bracket(x, y) + bracket(x, bracket(x, y)) * Fraction(1, 2) \
        + bracket(x, bracket(x, bracket(x, y))) * Fraction(1, 6)
    assert Ad(exp(x), y) == expect


@given(lie_elements(h4), lie_elements(h4), lie_elements(h4))
def test_adjoint_is_a_lie_morphism(g, a, b):
    G = exp(g)
    assert Ad(G, bracket(a, b)) == bracket(Ad(G, a), Ad(G, b))


def test_non_grouplike_rejected():
    import pytest
    from moperadkit.uea import UEAElement
    with pytest.raises(ValueError):
        GroupLikeElement(UEAElement.zero(h4))
    # 1 + 2x has constant term 1 but its logarithm carries x^2
    u = UEAElement.one(h4) + UEAElement.from_lie(x * 2)
    assert not GroupLikeElement(u).is_grouplike()


def test_kernel_embedding_n1_is_the_identity_map():
    k = kernel_free(1, 3)
    g = exp(k.gen("X") + bracket(k.gen("X"), k.gen("y0")) * 3)
    img = kernel_embed_phiN(g, 1)
    h3 = f2(3)
    assert img == exp(h3.gen("x") + bracket(h3.gen("x"), h3.gen("y")) * 3)


def test_kernel_embedding_is_multiplicative():
    k = kernel_free(2, 3)
    a = exp(k.gen("X") + k.gen("y1") * 2)
    b = exp(bracket(k.gen("y0"), k.gen("X")) - k.gen("y1"))
    assert kernel_embed_phiN(a * b, 2) == kernel_embed_phiN(a, 2) * kernel_embed_phiN(b, 2)


def test_kernel_generator_images():
    k = kernel_free(2, 3)
    h3 = f2(3)
    X, Y = exp(h3.gen("x")), exp(h3.gen("y"))
    assert kernel_embed_phiN(exp(k.gen("X")), 2) == power(X, 2)
    assert kernel_embed_phiN(exp(k.gen("y1")), 2) == power(X, -1) * Y * X

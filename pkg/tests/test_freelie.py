from hypothesis import given, strategies as st

from moperadkit.freelie import free_lie, is_lyndon, lyndon_words, poly_bracket, witt


def test_lyndon_counts_match_witt():
    for k in (2, 3, 4):
        for d in range(1, 7 if k == 2 else 5):
            assert len([w for w in lyndon_words(k, d) if len(w) == d]) == witt(k, d)


def test_witt_small_values():
    assert [witt(2, d) for d in range(1, 8)] == [2, 1, 2, 3, 6, 9, 18]
    assert [witt(3, d) for d in range(1, 5)] == [3, 3, 8, 18]


def test_lyndon_words_are_lyndon():
    assert all(is_lyndon(w) for w in lyndon_words(3, 4))
    assert not is_lyndon((1, 0))
    assert not is_lyndon((0, 0))


@given(st.integers(2, 3), st.data())
def test_bracket_coords_round_trip(k, data):
    F = free_lie(k)
    d1 = data.draw(st.integers(1, 2))
    d2 = data.draw(st.integers(1, 2))
    u = data.draw(st.sampled_from(F.words(d1)))
    v = data.draw(st.sampled_from(F.words(d2)))
    poly = poly_bracket(F.expansion(u), F.expansion(v))
    assert F.to_poly(F.coords(poly)) == {m: c for m, c in poly.items() if c}

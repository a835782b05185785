import random

import pytest
from hypothesis import given, strategies as st

from moperadkit.braids import (AnnularBraidWord, BraidWord, annular_elementary, block_cross, cable, elementary_pure,
                               equal, format_word, full_twist, identity, in_pure_gamma, is_identity, is_pure,
                               linking_numbers, linking_with_zero, parse_word, permutation, sigma)


def words(n, max_len=8):
    letter = st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))


def test_braid_relations():
    assert equal(sigma(1, 3) * sigma(2, 3) * sigma(1, 3), sigma(2, 3) * sigma(1, 3) * sigma(2, 3))
    assert equal(sigma(1, 4) * sigma(3, 4), sigma(3, 4) * sigma(1, 4))
    assert not equal(sigma(1, 3) * sigma(2, 3), sigma(2, 3) * sigma(1, 3))
    assert not is_identity(sigma(1, 2) * sigma(1, 2))
    assert not equal(sigma(1, 2), sigma(1, 2, -1))


@given(words(4))
def test_inverse(w):
    assert is_identity(w * w.inverse())
    assert is_identity(w.inverse() * w)


@given(words(4), st.integers(0, 8), st.integers(1, 3), st.sampled_from((1, -1)))
def test_free_cancellation_is_invisible(w, pos, i, e):
    pos = min(pos, len(w.letters))
    ls = w.letters[:pos] + ((i, e), (i, -e)) + w.letters[pos:]
    assert equal(BraidWord(4, ls), w)


@given(words(4))
def test_full_twist_is_central(w):
    d = full_twist(4)
    assert equal(d * w, w * d)


@given(words(3), words(3))
def test_linking_is_additive_on_pure_braids(a, b):
    pa, pb = a * identity(3), b * identity(3)
    if is_pure(pa) and is_pure(pb):
        la, lb, lab = linking_numbers(pa), linking_numbers(pb), linking_numbers(pa * pb)
        for k in set(la) | set(lb):
            assert lab.get(k, 0) == la.get(k, 0) + lb.get(k, 0)


def test_elementary_pure_linking():
    for i, j in ((1, 2), (1, 3), (2, 3)):
        x = elementary_pure(i, j, 3)
        assert is_pure(x)
        assert {k: v for k, v in linking_numbers(x).items() if v} == {(i, j): 2}


def test_full_twist_links_every_pair_once():
    lk = linking_numbers(full_twist(3))
    assert lk == {(1, 2): 2, (1, 3): 2, (2, 3): 2}


def test_cable_of_crossing_is_block_crossing():
    assert equal(cable(sigma(1, 2), 1, 2), block_cross(2, 1))
    assert equal(cable(sigma(1, 2), 2, 3), block_cross(1, 3))
    assert is_identity(cable(sigma(1, 2), 1, 0))


@given(st.lists(st.sampled_from([(1, 2), (1, 3), (2, 3)]), max_size=4), words(3))
def test_cable_is_a_homomorphism_after_pure_braids(pairs, b):
    # strands are indexed by start position, so the first factor must be pure
    a = identity(3)
    for i, j in pairs:
        a = a * elementary_pure(i, j, 3)
    assert equal(cable(a * b, 2, 2), cable(a, 2, 2) * cable(b, 2, 2))


def test_permutation():
    assert permutation(sigma(1, 3) * sigma(2, 3)) == {1: 3, 2: 1, 3: 2}


def test_annular_linking_and_membership():
    x = annular_elementary(0, 2, 2)
    assert linking_with_zero(x) == (0, 1)
    assert in_pure_gamma(x, 1)
    assert not in_pure_gamma(x, 2)
    assert in_pure_gamma(x * x, 2)
    with pytest.raises(ValueError):
        AnnularBraidWord(1, ((0, 1),))


def test_parse_and_format():
    w = parse_word("s1 s2^-1 s1", 3)
    assert format_word(w) == "s1 s2^-1 s1"
    with pytest.raises(ValueError):
        parse_word("t1", 3)


def test_random_words_of_equal_artin_images_are_equal():
    rng = random.Random(3)
    for _ in range(50):
        w = BraidWord(4, tuple((rng.randint(1, 3), rng.choice((1, -1))) for _ in range(10)))
        # conjugating by the half-twist squared is trivial
        assert equal(full_twist(4).inverse() * w * full_twist(4), w)

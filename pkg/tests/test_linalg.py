from fractions import Fraction

from hypothesis import given, strategies as st

from moperadkit.linalg import EchelonSpace, solve_affine

small = st.integers(-3, 3)
vectors = st.dictionaries(st.integers(0, 5), small.filter(bool), max_size=6)


@given(st.lists(vectors, max_size=6), vectors)
def test_reduce_is_in_coset_and_avoids_pivots(rows, v):
    sp = EchelonSpace()
    for r in rows:
        sp.add(r)
    red = sp.reduce(v)
    assert not set(red) & sp.pivots()
    diff = dict(v)
    for k, c in red.items():
        diff[k] = diff.get(k, 0) - c
    assert sp.contains({k: c for k, c in diff.items() if c})


@given(st.lists(vectors, max_size=6))
def test_dimension_counts_independent_rows(rows):
    sp = EchelonSpace()
    grew = sum(sp.add(r) for r in rows)
    assert grew == len(sp)
    for r in rows:
        assert sp.contains(r)


def test_solve_affine_unique():
    s = solve_affine([{0: 1, 1: 1}, {0: 1, 1: -1}], [3, 1], 2)
    assert s.solution == [2, 1] and s.rank == 2 and s.nullity == 0


def test_solve_affine_free_variables_zero():
    s = solve_affine([{0: 1, 1: 2}], [4], 3)
    assert s.nullity == 2
    assert s.solution == [4, 0, 0]


def test_solve_affine_inconsistent():
    s = solve_affine([{0: 1}, {0: 2}], [1, 3], 1)
    assert s.solution is None
    assert s.inconsistent_row


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(small, min_size=3, max_size=3))
def test_solution_satisfies_consistent_system(A, x):
    rows = [{j: c for j, c in enumerate(r) if c} for r in A]
    rhs = [sum(Fraction(c) * x[j] for j, c in enumerate(r)) for r in A]
    s = solve_affine(rows, rhs, 3)
    assert s.solution is not None
    for r, b in zip(rows, rhs):
        assert sum(c * s.solution[j] for j, c in r.items()) == b

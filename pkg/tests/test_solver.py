import json
from fractions import Fraction

import pytest

from moperadkit.graded_lie import bracket
from moperadkit.solver import (random_free_choice, solve_associator, solve_by_degree, solve_cyclotomic,
                               transport_grt)
from moperadkit.torsors import AssocTuple, validate_assoc, validate_cycassoc
from moperadkit.uea import exp, f2, kernel_free, log


def xy_coefficient(phi):
    ell = log(phi)
    h = ell.handle
    k = [k for k in h.degree_range(2) if h.basis_label(k) == "[x,y]"][0]
    return ell.coords.get(k, Fraction(0))


def test_degree_two_coefficient(assoc4):
    assert abs(xy_coefficient(assoc4.phi)) == Fraction(1, 24)
    assert xy_coefficient(assoc4.phi) == Fraction(-1, 24)


def test_no_degree_one_part(assoc4):
    assert log(assoc4.phi).component(1).is_zero()


def test_certification_matches_validation(assoc4):
    v = validate_assoc(assoc4)
    assert v.ok and v.certified_degree == 4


def test_step_table_shape():
    r = solve_associator(1, 4)
    assert [s.degree for s in r.steps] == [1, 2, 3, 4]
    assert all(s.rank + s.nullity == s.n_unknowns for s in r.steps)


def test_mu_scales_degree_two():
    r = solve_associator(2, 2)
    assert r.ok and xy_coefficient(r.solution.phi) == Fraction(-4, 24)


def test_deterministic():
    a = json.dumps(solve_associator(1, 3).to_json(), sort_keys=True)
    b = json.dumps(solve_associator(1, 3).to_json(), sort_keys=True)
    assert a == b
    c = solve_associator(1, 4, random_free_choice(1)).to_json()
    d = solve_associator(1, 4, random_free_choice(1)).to_json()
    assert c == d


def test_free_choices_are_gauge_equivalent(assoc4):
    other = solve_associator(1, 4, random_free_choice(2))
    assert other.ok
    assert other.solution.phi != assoc4.phi
    r = transport_grt(assoc4, other.solution)
    assert r.ok and r.unique and r.element.lam == 1


def test_cyclotomic_n1_shape(assoc3):
    r = solve_cyclotomic(assoc3, 1, 3)
    assert r.ok
    k = kernel_free(1, 3)
    X, y0 = k.gen("X"), k.gen("y0")
    assert r.solution.psi == exp(bracket(X, y0) * Fraction(-1, 24))


@pytest.mark.parametrize("N", [2, 3])
def test_cyclotomic_solves_and_validates(assoc3, N):
    r = solve_cyclotomic(assoc3, N, 3)
    assert r.ok
    v = validate_cycassoc(r.solution)
    assert v.ok and v.certified_degree == 3


def test_both_alpha_shift_signs_solve(assoc3):
    for s in (1, -1):
        r = solve_cyclotomic(assoc3, 3, 3, shift=s)
        assert r.ok
        assert validate_cycassoc(r.solution, shift=s).ok


def test_obstruction_report():
    h = f2(2)

    def residual(ell, d):
        # x-coefficient must be both 0 and 1
        c = ell.coords.get(0, 0) if d == 1 else 0
        return {"a": c, "b": c - 1} if d == 1 else {}
    ell, steps, obs = solve_by_degree(h, residual, 2)
    assert obs is not None and obs.degree == 1 and not steps
    j = obs.to_json()
    assert len(j["rows"]) == 2 and j["inconsistent_combination"]


def test_bad_arguments():
    with pytest.raises(ValueError):
        solve_associator(0, 3)
    with pytest.raises(ValueError):
        solve_associator(1, 0)
    with pytest.raises(ValueError):
        solve_cyclotomic(solve_associator(1, 2).solution, 2, 3)

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def assoc4():
    from moperadkit.solver import solve_associator
    r = solve_associator(1, 4)
    assert r.ok
    return r.solution


@pytest.fixture(scope="session")
def assoc3(assoc4):
    from moperadkit.torsors import AssocTuple
    return AssocTuple(assoc4.mu, assoc4.phi.truncate(3))


@pytest.fixture(scope="session")
def cyc2(assoc3):
    from moperadkit.solver import solve_cyclotomic
    r = solve_cyclotomic(assoc3, 2, 3)
    assert r.ok
    return r.solution

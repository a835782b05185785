"""One test and one printed PASS/FAIL line per acceptance criterion.

All comparisons are exact rational equalities (tolerance 0). Run directly
with ``python tests/test_acceptance.py`` for just the report lines.
"""
import pytest

from moperadkit.config import SuiteConfig
from moperadkit.suites import CRITERIA, NOT_REPRODUCIBLE, run_criterion

CFG = SuiteConfig()


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    r = run_criterion(number, CFG)
    with capsys.disabled():
        print("\n" + r.line())
    assert r.ok, r.detail


def test_criterion8_not_reproducible(capsys):
    num, what = NOT_REPRODUCIBLE
    with capsys.disabled():
        print(f"\n[NOT REPRODUCIBLE] criterion {num}: {what}; replaced by criteria 1-7 at truncation level")
    pytest.skip("analytic KZ-type associators are out of scope for exact truncated arithmetic")


if __name__ == "__main__":
    for num, _, _ in CRITERIA:
        print(run_criterion(num, CFG).line())
    print(f"[NOT REPRODUCIBLE] criterion {NOT_REPRODUCIBLE[0]}: {NOT_REPRODUCIBLE[1]}")

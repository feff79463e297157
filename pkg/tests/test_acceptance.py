"""Acceptance gate: the headline reproduction criteria.

Each criterion prints one [PASS]/[FAIL] line (run pytest with -s to see
them all grouped; with default capture they appear for failing tests).
"""

import pytest

from splicetorsion.verify import CRITERIA, _run


@pytest.mark.parametrize("number,name,fn", CRITERIA,
                         ids=["criterion_%02d" % n for n, _, _ in CRITERIA])
def test_criterion(number, name, fn):
    result = _run(number, name, fn)
    print("[%s] %2d. %s (%.2fs) - %s" % (
        "PASS" if result.passed else "FAIL",
        result.number, result.name, result.elapsed, result.detail))
    assert result.passed, "%s: %s" % (result.name, result.detail)

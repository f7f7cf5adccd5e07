"""Acceptance checklist: one test and one printed verdict line per criterion."""

import pytest

from splitalg.acceptance import ALL_CRITERIA, run_all

RESULTS = run_all()


def test_criteria_count():
    assert len(ALL_CRITERIA) == 9
    assert [r.number for r in RESULTS] == list(range(1, 10))


@pytest.mark.parametrize(
    "result", RESULTS, ids=[f"criterion-{r.number}-{r.title.replace(' ', '-')}" for r in RESULTS]
)
def test_criterion(result):
    print(result.line())
    assert result.passed, result.line()

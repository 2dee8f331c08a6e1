"""Acceptance gate: every criterion runs once, one pass/fail line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines as they
land. The suite is shared across the parametrized tests so the whole gate
executes exactly once per session.
"""

import pytest

from idealkit.acceptance import DEFAULT_SEED, criterion_names, run_all

NAMES = criterion_names()


@pytest.fixture(scope="module")
def suite():
    results = {row.name: row for row in run_all(DEFAULT_SEED)}
    print()
    for name in NAMES:
        row = results[name]
        verdict = "PASS" if row.passed else "FAIL"
        print(f"{verdict}  {row.name}  ({row.seconds:.2f}s)  {row.detail}")
    return results


def test_every_criterion_reported(suite):
    assert sorted(suite) == sorted(NAMES)
    assert len(NAMES) == 10


@pytest.mark.parametrize("name", NAMES)
def test_criterion(suite, name):
    row = suite[name]
    assert row.passed, f"{name}: {row.detail}"

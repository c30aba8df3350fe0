"""The nine acceptance criteria at full scale.

Each criterion prints one PASS/FAIL line; the lines are repeated in the
terminal summary.
"""

from __future__ import annotations

import pytest

from pointed_hopf.acceptance import CRITERIA, FULL_CAPS, run_criterion

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"{c[0]}-{c[1]}" for c in CRITERIA])
def test_criterion(number):
    res = run_criterion(number, FULL_CAPS)
    line = res.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert res.passed, res.failure
    assert res.within_budget, f"{res.seconds:.1f}s exceeds {res.budget_seconds}s"

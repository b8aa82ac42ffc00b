"""One check per acceptance criterion; each prints a PASS/FAIL line.

All comparisons are exact (tolerance zero).  The runtime budgets are pinned
in ``pathsmt.acceptance``: 60 s for the character sweep, 30 s for the
transition rows.
"""

import pytest

from pathsmt.acceptance import CRITERIA, format_line, run_all


def test_criteria_are_numbered_one_to_ten():
    assert [n for n, _, _ in CRITERIA] == list(range(1, 11))


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    (result,) = run_all({number})
    with capsys.disabled():
        print("\n" + format_line(*result))
    _, _, ok, detail, _ = result
    assert ok, detail

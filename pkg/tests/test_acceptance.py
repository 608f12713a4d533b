"""Acceptance criteria 1-10, one test each.

Each test records a ``[PASS]``/``[FAIL] criterion k: ...`` line; the lines are
printed in the terminal summary (see conftest.py) and, when this file is run
as a script, directly to stdout.
"""

import sys

import pytest

from lltlab import acceptance

RESULTS: dict[int, str] = {}


def _line(k, report):
    status = "PASS" if report.holds else "FAIL"
    return f"[{status}] criterion {k}: {acceptance.DESCRIPTIONS[k]} ({report.elapsed:.1f}s)"


@pytest.mark.parametrize("k", sorted(acceptance.CRITERIA))
def test_criterion(k):
    report = acceptance.CRITERIA[k]()
    RESULTS[k] = _line(k, report)
    print(RESULTS[k])
    assert report.holds, report.to_json()


if __name__ == "__main__":
    ok = True
    for k, report in acceptance.run(sys.argv[1:] and [int(a) for a in sys.argv[1:]]):
        print(_line(k, report), flush=True)
        ok &= report.holds
    sys.exit(0 if ok else 1)

"""The eleven acceptance criteria, each at exact tolerance.

One PASS/FAIL line per criterion is printed in the terminal summary (and by
running this file directly).  AC4 compares against printed coefficients that
are wrong in two places; it stays failing and is marked as a strict xfail.
"""

import pytest

from garding.checkers import ProbeConfig
from garding.report import CRITERIA, format_report

KNOWN_FAILURES = {
    "AC4": "printed C2 and C1 carry prod(1 + w_i) where prod(1 + w_i) - 1 is needed",
}

RESULTS = {}


def _param(index, criterion):
    key = f"AC{index + 1}"
    marks = [pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[key])] if key in KNOWN_FAILURES else []
    return pytest.param(criterion, id=key, marks=marks)


@pytest.mark.parametrize("criterion", [_param(i, c) for i, c in enumerate(CRITERIA)])
def test_criterion(criterion):
    result = criterion(ProbeConfig())
    RESULTS[result.key] = result
    print(format_report([result]))
    bad = [e for e in result.entries if not e.passed]
    assert result.passed, "; ".join(f"{e.check}: expected {e.expected}, observed {e.observed}" for e in bad)


def test_known_failure_is_isolated():
    """Inside AC4 only the printed-coefficient comparison fails."""
    from garding.report import fano_rayleigh

    result = fano_rayleigh(ProbeConfig())
    failing = [e.check for e in result.entries if not e.passed]
    assert failing == [result.entries[0].check]
    assert "printed" in failing[0]


def summary_lines():
    lines = []
    for key in sorted(RESULTS, key=lambda k: int(k[2:])):
        r = RESULTS[key]
        note = f"  (known: {KNOWN_FAILURES[key]})" if key in KNOWN_FAILURES and not r.passed else ""
        lines.append(f"{key:<5} {'PASS' if r.passed else 'FAIL'}  {r.title}{note}")
    return lines


if __name__ == "__main__":
    from garding.report import run_report

    print(format_report(run_report(ProbeConfig())))

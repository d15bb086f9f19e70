"""Acceptance gate: every advertised guarantee, one test per check.

Each test prints a single machine-readable pass/fail line.  The checks
share one context so exact widths computed for one criterion are reused
by the others; run order follows the registry.  The ``stretch-double``
check is non-blocking by design: the instance is beyond the exact
engine's range and only a wrong decision fails it.
"""

from __future__ import annotations

import sys

import pytest

from lcwlab.verify import CHECKS, VerificationContext, run_check


@pytest.fixture(scope="session")
def ctx():
    return VerificationContext()


@pytest.mark.parametrize(("name", "blocking"), CHECKS, ids=[n for n, _ in CHECKS])
def test_criterion(name: str, blocking: bool, ctx: VerificationContext, capfd):
    result = run_check(name, ctx)
    status = "PASS" if result.passed else "FAIL"
    line = f"[{status}] {name}: {result.detail} ({result.millis} ms)"
    # Bypass capture so the line lands in plain ``pytest -v`` output.
    with capfd.disabled():
        print(line, file=sys.stderr, flush=True)
    if not result.passed and not blocking:
        pytest.xfail(f"non-blocking criterion failed: {result.detail}")
    assert result.passed, f"{name}: {result.detail}"

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SUITE_LIMIT_SECONDS = 300.0
_start = {}


def pytest_sessionstart(session):
    _start["t"] = time.perf_counter()


def _criterion_lines():
    mod = sys.modules.get("test_acceptance")
    return list(getattr(mod, "RESULTS", {}).items()) if mod else []


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _start.get("t", time.perf_counter())
    _start["elapsed"] = elapsed
    if _criterion_lines() and elapsed >= SUITE_LIMIT_SECONDS and exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter):
    lines = _criterion_lines()
    if not lines:
        return
    elapsed = _start.get("elapsed", 0.0)
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
    verdict = "PASS" if elapsed < SUITE_LIMIT_SECONDS else "FAIL"
    terminalreporter.write_line(
        f"criterion 8 [{verdict}] full suite wall clock {elapsed:.1f} s (limit {SUITE_LIMIT_SECONDS:.0f} s, "
        f"default order bound 64)"
    )

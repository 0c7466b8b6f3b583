import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from egtcheck.enumerate import enumerate_all  # noqa: E402


@pytest.fixture(scope="session")
def levels():
    """n -> tuple of canonical graphs, n = 1..8 (built once per session)."""
    return {n: enumerate_all(n).graphs for n in range(1, 9)}


@pytest.fixture(scope="session")
def small_graphs(levels):
    return [g for n in range(1, 7) for g in levels[n]]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(RESULTS.items(), key=lambda kv: int(kv[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

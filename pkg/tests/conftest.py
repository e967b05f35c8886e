import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from eldist import build_graph  # noqa: E402


@pytest.fixture
def p2():
    return build_graph(2, [(0, 1, 1.0)])


@pytest.fixture
def p3():
    return build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one acceptance line, then assert the criterion."""

    def _report(number, name, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

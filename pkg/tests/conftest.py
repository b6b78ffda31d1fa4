from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from lexidim.graph import Graph, build_graph

_acceptance: list[tuple[str, str]] = []


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 7) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def connected_graphs(draw, min_order: int = 2, max_order: int = 7) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = list(combinations(range(n), 2))
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return build_graph(n, edges)


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter) -> None:
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")

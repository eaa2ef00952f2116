import itertools

import pytest
from hypothesis import strategies as st

from properconn.graph import Graph

# lines collected by the acceptance tests, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[i])


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    if rest:
        extra = draw(st.lists(st.sampled_from(rest), unique=True, max_size=len(rest)))
        edges.update(extra)
    return Graph.canonical(n, edges)


@st.composite
def colored_graphs(draw, max_n=7, max_k=3):
    g = draw(connected_graphs(max_n=max_n))
    k = draw(st.integers(1, max_k))
    colors = draw(st.lists(st.integers(1, k), min_size=g.m, max_size=g.m))
    return g, colors


@pytest.fixture
def k4():
    return Graph.canonical(4, itertools.combinations(range(4), 2))

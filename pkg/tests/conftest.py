import itertools
import random

import pytest
from hypothesis import strategies as st

from neutralgraph.graph import build
from neutralgraph.generators import random_connected

_acceptance = {}


@st.composite
def graphs(draw, min_order=1, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build(n, chosen)


@st.composite
def connected_graphs(draw, min_order=2, max_order=10):
    n = draw(st.integers(min_order, max_order))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected(n, random.Random(seed))


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

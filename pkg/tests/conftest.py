import sys
from pathlib import Path

import pytest

from plumbkit.graph import chain, from_edges, load_graph
from plumbkit.lattice import Lattice

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def a4():
    """Three -2 curves in a chain."""
    return Lattice(chain([-2, -2, -2]))


@pytest.fixture
def star():
    """Central -2 curve with three -3 neighbours."""
    return Lattice(from_edges([-2, -3, -3, -3], [(0, 1), (0, 2), (0, 3)]))


@pytest.fixture
def e8():
    return Lattice(load_graph(FIXTURES / "e8.json"))


@pytest.fixture
def brieskorn1():
    return Lattice(load_graph(FIXTURES / "brieskorn_t1.json"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

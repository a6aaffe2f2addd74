import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from locgame.designs import Design, incidence_graph  # noqa: E402

FANO_BLOCKS = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]

# the two non-isomorphic BIBD(7,21,9,3,3) pictured as columns
FIG1_FIRST = """#cols
000000000111111222222
111333555333444333444
222444666555666666555
"""
FIG1_SECOND = """#cols
000000000111111222222
111333555333444333444
222444666556566566556
"""


@pytest.fixture
def fano():
    return Design(7, FANO_BLOCKS)


@pytest.fixture
def heawood(fano):
    return incidence_graph(fano, name="heawood")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

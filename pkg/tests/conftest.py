from pathlib import Path

import numpy as np
import pytest

from tropsched.linalg import TropMatrix
from tropsched.scheduler import ProjectSpec
from tropsched.semifield import MAX_PLUS

N = -np.inf
DATA = Path(__file__).parent / "data"

# three-activity example project
EXAMPLE_C = [[4, 0, N], [2, 3, 1], [1, 1, 3]]
EXAMPLE_D = [[N, -2, 1], [0, N, 2], [-1, N, N]]


@pytest.fixture
def C():
    return TropMatrix(MAX_PLUS, EXAMPLE_C)


@pytest.fixture
def D():
    return TropMatrix(MAX_PLUS, EXAMPLE_D)


@pytest.fixture
def project(C, D):
    return ProjectSpec(C, D, ("A", "B", "C"))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("AC")[1].split()[0])):
            terminalreporter.write_line(line)

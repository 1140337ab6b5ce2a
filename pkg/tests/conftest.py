import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import saftkit as sk


@pytest.fixture(scope="session")
def grid():
    return sk.make_grid(1024, -20.0, 20.0)


@pytest.fixture(scope="session")
def gauss1(grid):
    return sk.generate("gaussian", {"sigma": 1.0}, grid)


@pytest.fixture(scope="session")
def gauss15(grid):
    return sk.generate("gaussian", {"sigma": 1.5}, grid)


@pytest.fixture(scope="session")
def offset_lct():
    # general matrix with offsets used throughout: det = 1*2 - 2*0.5 = 1
    return sk.make_matrix(1.0, 2.0, 0.5, 2.0, 0.3, -0.4)


@pytest.fixture(scope="session")
def plain_lct():
    return sk.make_matrix(1.0, 2.0, 0.5, 2.0, 0.0, 0.0)

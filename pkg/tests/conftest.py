import numpy as np
import pytest

from lrckit import build_field


@pytest.fixture(scope="session")
def gf2():
    return build_field(2)


@pytest.fixture(scope="session")
def gf3():
    return build_field(3)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return build_field(5)


@pytest.fixture(scope="session")
def gf7():
    return build_field(7)


def random_matrix(rng, gf, rows, cols):
    return rng.integers(0, gf.q, size=(rows, cols)).astype(np.int64)

import numpy as np
import pytest

from gtfkit import ParamPair


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def classical():
    return ParamPair(2.0, 2.0)

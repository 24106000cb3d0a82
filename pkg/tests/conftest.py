import numpy as np
import pytest

from ffq import Quaternion


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_quaternion(rng, scale=1.0):
    return Quaternion(*(scale * rng.standard_normal(4)))


def qdist(a, b):
    return (a - b).norm()

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def complex_gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)

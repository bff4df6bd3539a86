import numpy as np
import pytest

from jcphase import FockCutoff, JcParams


@pytest.fixture
def params():
    return JcParams(1.0, 1.0, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_density_matrix(rng, dim):
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def random_hermitian(rng, dim):
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return m + m.conj().T

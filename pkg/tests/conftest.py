import numpy as np
import pytest


def haar_unitary(rng, d: int) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_state(rng, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_permutation(rng, n: int) -> tuple:
    return tuple(int(x) + 1 for x in rng.permutation(n))


@pytest.fixture
def rng():
    return np.random.default_rng(0)

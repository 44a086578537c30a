import numpy as np
import pytest

from phasepoint.symplectic import GenWord
from phasepoint.wigner import QuantumState


def random_state(n, rng):
    vec = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return QuantumState(vec / np.linalg.norm(vec))


def random_symplectic(modulus, rng, length=6):
    factors = tuple(
        ("+" if rng.integers(2) else "-", int(rng.integers(1, modulus)))
        for _ in range(length)
    )
    return GenWord(factors, modulus).evaluate()


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)

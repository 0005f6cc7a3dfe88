import numpy as np
import pytest

from almostflat.bundle import CocycleBundle
from almostflat.config import Settings
from almostflat.fixtures import filled_square, sphere_complex, torus_complex
from almostflat.matrixcore import expi_hermitian
from almostflat.sampled import SampledUnitaryMap


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def torus():
    return torus_complex()


@pytest.fixture(scope="session")
def square():
    return filled_square()


@pytest.fixture(scope="session")
def octahedron():
    return sphere_complex(0)


def random_unitary(rank: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    a = rng.standard_normal((rank, rank)) + 1j * rng.standard_normal((rank, rank))
    h = (a + a.conj().T) / 2
    return expi_hermitian(scale * h / np.linalg.norm(h, 2))


def conjugated(bundle: CocycleBundle, u: np.ndarray) -> CocycleBundle:
    transitions = {
        pair: SampledUnitaryMap(f.simplex, f.depth, u @ f.values @ u.conj().T) for pair, f in bundle.transitions.items()
    }
    return CocycleBundle(base=bundle.base, rank=bundle.rank, depth=bundle.depth, transitions=transitions)

import numpy as np
import pytest

from almostflat.errors import ComplexError, PreconditionError
from almostflat.fixtures import random_hermitian
from almostflat.matrixcore import expi_hermitian, is_unitary
from almostflat.sampled import (
    ExtensionMethod,
    SampledUnitaryMap,
    cone_sources,
    from_function,
    identity_map,
    pointwise_product,
    unitary_extend
)
from almostflat.simplicial import boundary_indices, lattice_points


def phase_map(simplex, depth, theta):
    return from_function(simplex, depth, lambda x: np.array([[np.exp(1j * theta * x[0])]]))


def test_identity_map_is_flat():
    f = identity_map((0, 1, 2), 4, 2)
    assert f.values.shape == (15, 2, 2)
    assert f.lipschitz_estimate() == 0.0
    assert f.diameter() == 0.0


def test_lipschitz_estimate_of_a_phase_ramp():
    f = phase_map((0, 1, 2), 4, 0.4)
    assert f.lipschitz_estimate() == pytest.approx(2 * np.sin(0.05) / (np.sqrt(2) / 4), rel=1e-9)


def test_single_point_maps_have_no_lipschitz_estimate():
    with pytest.raises(PreconditionError):
        identity_map((0,), 4, 1).lipschitz_estimate()


def test_non_unitary_values_are_refused():
    with pytest.raises(PreconditionError):
        SampledUnitaryMap((0, 1), 2, np.full((3, 1, 1), 2.0))


def test_value_at_and_restriction():
    f = phase_map((0, 1, 2), 4, 0.4)
    assert f.value_at((4, 0, 0))[0, 0] == pytest.approx(np.exp(0.4j))
    edge = f.restrict((0, 2))
    assert edge.simplex == (0, 2)
    assert len(edge.values) == 5
    assert edge.value_at((2, 2))[0, 0] == pytest.approx(np.exp(0.2j))
    with pytest.raises(ComplexError):
        f.value_at((1, 1, 1))


def test_evaluation_off_the_lattice_is_unitary_and_exact_on_it():
    f = phase_map((0, 1, 2), 4, 0.4)
    assert np.array_equal(f.evaluate((0.5, 0.25, 0.25)), f.value_at((2, 1, 1)))
    value = f.evaluate((0.3, 0.3, 0.4))
    assert is_unitary(value)
    assert value[0, 0] == pytest.approx(np.exp(0.12j), abs=1e-3)


def test_pointwise_product_adds_phases():
    f = phase_map((0, 1), 3, 0.3)
    g = phase_map((0, 1), 3, 0.2)
    assert np.allclose(pointwise_product(f, g).values, phase_map((0, 1), 3, 0.5).values)


def test_cone_sources():
    sources = cone_sources(2, 3)
    interior = [i for i in range(len(lattice_points(2, 3))) if i not in boundary_indices(2, 3)]
    assert interior == [lattice_points(2, 3).index((1, 1, 1))]
    assert sources[interior[0]][1] == 0.0
    for storage, full in enumerate(boundary_indices(2, 3)):
        assert sources[full] == (storage, 1.0)


@pytest.mark.parametrize("method", [ExtensionMethod.SERIES, ExtensionMethod.EXPONENTIAL])
def test_unitary_extension_keeps_the_boundary(method):
    boundary = phase_map((0, 1, 2), 4, 0.3).boundary()
    extension = unitary_extend(boundary, method=method)
    assert not extension.boundary_only
    assert is_unitary(extension.values)
    assert np.array_equal(extension.values[list(boundary_indices(2, 4))], boundary.values)


def test_series_extension_of_a_constant_is_constant():
    u = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    boundary = SampledUnitaryMap((0, 1, 2), 3, np.broadcast_to(u, (9, 2, 2)), boundary_only=True)
    extension = unitary_extend(boundary)
    assert np.allclose(extension.values, u)


def test_series_extension_refuses_wide_boundaries():
    boundary = phase_map((0, 1, 2), 4, 3.0).boundary()
    with pytest.raises(PreconditionError):
        unitary_extend(boundary, method=ExtensionMethod.SERIES)
    extension = unitary_extend(boundary, method=ExtensionMethod.EXPONENTIAL)
    assert is_unitary(extension.values)


def test_extension_expects_a_boundary_map():
    with pytest.raises(PreconditionError):
        unitary_extend(identity_map((0, 1), 2, 1))


def smooth_map(rng, rank, size):
    offset = random_hermitian(rank, rng)
    slopes = np.stack([random_hermitian(rank, rng, size) for _ in range(3)])
    return from_function((0, 1, 2), 3, lambda x: expi_hermitian(offset + np.einsum("j,jab->ab", x, slopes)))


def test_pointwise_product_of_lipschitz_maps(rng):
    for _ in range(500):
        f = smooth_map(rng, 2, rng.uniform(0.01, 0.1))
        g = smooth_map(rng, 2, rng.uniform(0.01, 0.1))
        epsilon = max(f.lipschitz_estimate(), g.lipschitz_estimate())
        assert pointwise_product(f, g).lipschitz_estimate() <= 3 * epsilon + 1e-12


def test_extension_ratio_does_not_depend_on_the_rank():
    ratios = {}
    for rank in (1, 2, 4, 8):
        directions = np.random.default_rng(rank)
        worst = 0.0
        for trial in range(200):
            simplex = (0, 1, 2) if trial % 2 == 0 else (0, 1, 2, 3)
            slopes = np.random.default_rng(trial).uniform(-0.2, 0.2, len(simplex))
            h = random_hermitian(rank, directions)
            boundary = from_function(simplex, 4, lambda x: expi_hermitian(float(np.dot(slopes, x)) * h)).boundary()
            extension = unitary_extend(boundary)
            worst = max(worst, extension.lipschitz_estimate() / boundary.lipschitz_estimate())
        ratios[rank] = worst

    assert min(ratios.values()) >= 1.0 - 1e-9
    assert max(ratios.values()) < 1.25 * min(ratios.values())

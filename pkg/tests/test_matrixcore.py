import numpy as np
import pytest

from almostflat.errors import PreconditionError
from almostflat.matrixcore import (
    dagger,
    distance_to_identity,
    expi_hermitian,
    is_skew,
    is_unitary,
    op_norm,
    polar_project,
    skew_project,
    sqrt_one_plus_vsq,
    sqrt_one_plus_vsq_spectral,
    unitarize_g,
    unitary_eigenphases,
    unitary_log
)
from tests.conftest import random_unitary


def small_skew(rank, rng, norm):
    a = rng.standard_normal((rank, rank)) + 1j * rng.standard_normal((rank, rank))
    v = skew_project(a)
    return v * (norm / op_norm(v))


def test_op_norm_matches_largest_singular_value(rng):
    m = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    assert op_norm(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[0], rel=1e-10)


def test_op_norm_power_iteration_on_large_matrices(rng):
    m = rng.standard_normal((40, 40))
    assert op_norm(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[0], rel=1e-6)


def test_op_norm_of_diagonal():
    assert op_norm(np.diag([1.0, -3.0, 2.0])) == pytest.approx(3.0)


def test_skew_projection_splits_off_a_hermitian_part(rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    v = skew_project(a)
    h = a - v
    assert is_skew(v)
    assert np.allclose(h, dagger(h))


def test_series_square_root_matches_spectral(rng):
    for norm in (0.05, 0.2, 0.45):
        v = small_skew(4, rng, norm)
        w = sqrt_one_plus_vsq(v, tol=1e-12)
        assert np.allclose(w @ w, np.eye(4) + v @ v, atol=1e-10)
        assert np.allclose(w, sqrt_one_plus_vsq_spectral(v), atol=1e-10)


def test_series_square_root_rejects_large_arguments(rng):
    with pytest.raises(PreconditionError):
        sqrt_one_plus_vsq(small_skew(3, rng, 0.6))


def test_g_is_unitary_and_inverts_the_skew_projection(rng):
    v = small_skew(3, rng, 0.3)
    u = unitarize_g(v)
    assert is_unitary(u, tol=1e-9)
    assert np.allclose(skew_project(u), v, atol=1e-10)
    assert np.allclose(unitarize_g(np.zeros((3, 3))), np.eye(3))


def test_polar_projection_fixes_unitaries_and_retracts_perturbations(rng):
    u = random_unitary(3, rng)
    assert np.allclose(polar_project(u), u, atol=1e-12)
    perturbed = u + 0.05 * rng.standard_normal((3, 3))
    assert is_unitary(polar_project(perturbed), tol=1e-10)


def test_polar_projection_on_scalars():
    assert polar_project(np.array([[1.1j]]))[0, 0] == pytest.approx(1j)
    with pytest.raises(PreconditionError):
        polar_project(np.array([[0.1]]))


def test_polar_projection_refuses_far_matrices():
    with pytest.raises(PreconditionError):
        polar_project(np.diag([1.0, 0.1]))


def test_logarithm_inverts_the_exponential(rng):
    u = random_unitary(4, rng, scale=2.0)
    log = unitary_log(u)
    assert is_skew(log)
    assert np.allclose(expi_hermitian(-1j * log), u, atol=1e-10)


def test_logarithm_refuses_phases_near_the_branch_cut():
    with pytest.raises(PreconditionError):
        unitary_log(np.diag([1.0, np.exp(3.1j)]), margin=0.1)


def test_eigenphases_of_a_diagonal_unitary():
    phases = unitary_eigenphases(np.diag(np.exp([0.5j, -1.0j])))
    assert sorted(phases) == pytest.approx([-1.0, 0.5])


def test_distance_to_identity_of_a_phase():
    assert distance_to_identity(np.array([[np.exp(0.3j)]])) == pytest.approx(2 * np.sin(0.15))

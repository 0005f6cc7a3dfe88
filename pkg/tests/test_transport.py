import math

import numpy as np
import pytest

from almostflat.bundle import flatness_audit
from almostflat.errors import ComplexError, PreconditionError, ThresholdError
from almostflat.fixtures import circle_with_holonomy, random_flat_bundle, simplex_complex
from almostflat.simplicial import (
    ContractionWitness,
    SimplicialPath,
    bfs_contraction_witness,
    contraction_witness_in_tree
)
from almostflat.transport import (
    edge_transport,
    hc_constants,
    loop_defect,
    path_transport,
    product_perturbation_bound,
    two_simplex_bound,
    verify_witnessed_bound
)
from tests.conftest import random_unitary

SQUARE_LOOP = SimplicialPath((0, 1, 2, 3, 0))


class TestBounds:

    @pytest.mark.parametrize("n", [0, -1])
    def test_complexity_below_one_is_refused(self, n):
        with pytest.raises(PreconditionError):
            hc_constants(n)

    def test_constants_of_one_and_three_triangles(self):
        assert hc_constants(1).c == pytest.approx(7 * math.sqrt(2))
        assert hc_constants(1).delta == pytest.approx(1 / (7 * math.sqrt(2)))
        assert hc_constants(3).c == pytest.approx(63 * math.sqrt(2))
        assert hc_constants(3).delta == pytest.approx(1 / (21 * math.sqrt(2)))

    def test_two_simplex_bound(self):
        assert two_simplex_bound(0.01) == pytest.approx(0.07 * math.sqrt(2))
        with pytest.raises(PreconditionError):
            two_simplex_bound(0.8)

    def test_product_perturbation_bound(self):
        assert product_perturbation_bound(3, 0.1) == pytest.approx(0.7)
        with pytest.raises(PreconditionError):
            product_perturbation_bound(2, 1.5)

    def test_two_simplex_defect_stays_within_its_bound(self, rng):
        triangle = simplex_complex(2)
        boundary = SimplicialPath((0, 1, 2, 0))
        for trial in range(1000):
            rank = (1, 2, 4, 8)[trial % 4]
            bundle = random_flat_bundle(triangle, rank, rng.uniform(0.001, 0.1), depth=2, rng=rng)
            audit = flatness_audit(bundle).epsilon
            assert loop_defect(bundle, boundary) <= two_simplex_bound(audit) + 1e-12

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_perturbed_products_stay_within_their_bound(self, n, rng):
        for _ in range(1000):
            a = [random_unitary(3, rng) for _ in range(n - 1)]
            a.append(np.linalg.multi_dot([np.eye(3)] + a[::-1]).conj().T)
            b = []
            for _ in range(n):
                e = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
                b.append(np.eye(3) + rng.uniform(0.001, 0.05) * e / np.linalg.norm(e, 2))
            epsilon = max(np.linalg.norm(m - np.eye(3), 2) for m in b)

            product = np.eye(3)
            for a_i, b_i in zip(a, b):
                product = a_i @ b_i @ product
            assert np.linalg.norm(product - np.eye(3), 2) < product_perturbation_bound(n, epsilon)


class TestTransport:

    def test_reverse_edge_transport_is_the_inverse(self, square):
        bundle = random_flat_bundle(square, 2, 0.05)
        forward = edge_transport(bundle, 0, 2)
        assert np.allclose(edge_transport(bundle, 2, 0), forward.conj().T)
        assert np.allclose(edge_transport(bundle, 1, 1), np.eye(2))

    def test_transport_across_a_missing_edge_is_refused(self, square):
        bundle = random_flat_bundle(square, 1, 0.05)
        with pytest.raises(ComplexError):
            edge_transport(bundle, 1, 3)

    def test_circle_holonomy(self, rng):
        u = random_unitary(3, rng)
        bundle = circle_with_holonomy(u)
        loop = SimplicialPath((0, 1, 2, 3, 4, 5, 0))
        assert np.allclose(path_transport(bundle, loop).matrix, u)
        assert loop_defect(bundle, loop) == pytest.approx(np.linalg.norm(u - np.eye(3), 2))
        assert np.allclose(path_transport(bundle, loop.reversed()).matrix, u.conj().T)

    def test_defect_of_an_open_path_is_refused(self):
        bundle = circle_with_holonomy(np.eye(1))
        with pytest.raises(ComplexError):
            loop_defect(bundle, SimplicialPath((0, 1, 2)))


class TestWitnessedBound:

    def test_square_boundary_is_within_its_bound(self, square):
        bundle = random_flat_bundle(square, 2, 0.05)
        report = verify_witnessed_bound(bundle, SQUARE_LOOP, bfs_contraction_witness(SQUARE_LOOP, square))
        assert report.passed
        assert report.complexity == 2
        assert report.bound == pytest.approx(hc_constants(2).c * report.audit)
        assert report.to_dict()["pass"] is True

    def test_too_large_flatness_is_refused(self, square):
        bundle = random_flat_bundle(square, 1, 0.05)
        with pytest.raises(ThresholdError):
            verify_witnessed_bound(bundle, SQUARE_LOOP, bfs_contraction_witness(SQUARE_LOOP, square), audit=0.2)

    def test_witness_that_does_not_contract_is_refused(self, square):
        bundle = random_flat_bundle(square, 1, 0.05)
        with pytest.raises(ComplexError):
            verify_witnessed_bound(bundle, SQUARE_LOOP, ContractionWitness())

    def test_backtracking_loop_has_a_zero_bound(self, square):
        bundle = random_flat_bundle(square, 2, 0.05)
        loop = SimplicialPath((0, 1, 2, 1, 0))
        report = verify_witnessed_bound(bundle, loop, contraction_witness_in_tree(loop, square), audit=0.5)
        assert report.complexity == 0
        assert report.bound == 0.0
        assert report.defect == pytest.approx(0.0, abs=1e-12)
        assert report.passed

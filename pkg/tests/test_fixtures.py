import math

import numpy as np
import pytest

from almostflat.bundle import cocycle_check, flatness_audit
from almostflat.errors import ComplexError, PreconditionError
from almostflat.fixtures import (
    circle_covering,
    circle_with_holonomy,
    curvature_ratio,
    cycle_complex,
    girard_area,
    holonomy_oracle,
    lattice_torus,
    monopole_bundle,
    random_hermitian,
    simplex_complex,
    spherical_area,
    sphere_complex,
    sphere_coordinates,
    torus_double_cover,
    torus_loop_class,
    torus_substitution
)
from almostflat.fixtures.complexes import TORUS_PERIODS
from almostflat.matrixcore import op_norm
from almostflat.simplicial import SimplicialPath, presentation_from_tree
from almostflat.transport import path_transport

OCTANT = (np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0]))


class TestComplexes:

    @pytest.mark.parametrize("depth, counts", [(0, (6, 12, 8)), (1, (18, 48, 32))])
    def test_sphere_counts(self, depth, counts):
        sphere = sphere_complex(depth)
        assert (len(sphere.vertices), len(sphere.edges), len(sphere.simplices_of_dimension(2))) == counts
        assert sphere.euler_characteristic() == 2
        assert sphere.is_closed_oriented_surface()

    def test_sphere_coordinates_are_unit_vectors(self):
        coordinates = sphere_coordinates(sphere_complex(1))
        assert coordinates.shape == (18, 3)
        assert np.allclose(np.linalg.norm(coordinates, axis=1), 1.0)

    def test_torus(self, torus):
        assert (len(torus.vertices), len(torus.edges), len(torus.simplices_of_dimension(2))) == (7, 21, 14)
        assert torus.euler_characteristic() == 0
        assert torus.is_closed_oriented_surface()

    def test_lattice_torus_with_the_torus_periods(self):
        torus, representatives = lattice_torus(TORUS_PERIODS)
        assert len(torus.vertices) == 7
        assert len(torus.simplices_of_dimension(2)) == 14
        assert set(representatives) == set(torus.vertices)

    def test_dependent_periods_are_refused(self):
        with pytest.raises(ComplexError):
            lattice_torus(((1, 2), (2, 4)))

    def test_torus_loop_classes(self):
        assert torus_loop_class(SimplicialPath((0, 1, 2, 3, 4, 5, 6, 0))) == (2, 1)
        assert torus_loop_class(SimplicialPath((0, 3, 6, 2, 5, 1, 4, 0))) == (-1, 3)
        assert torus_loop_class(SimplicialPath((0, 1, 3, 0))) == (0, 0)

    def test_torus_substitution_covers_every_generator(self, torus):
        presentation = presentation_from_tree(torus)
        substitution = torus_substitution(presentation)
        assert set(substitution) == set(presentation.generators)
        assert all(set(label for label, _ in word) <= {"u", "v"} for word in substitution.values())

    def test_double_cover(self, torus):
        cover = torus_double_cover()
        assert cover.target == torus
        assert len(cover.source.vertices) == 14
        assert len(cover.source.simplices_of_dimension(2)) == 28
        assert cover.source.is_closed_oriented_surface()

    def test_circles(self):
        assert len(cycle_complex(5).edges) == 5
        assert len(circle_covering(4, 3).source.vertices) == 12
        assert simplex_complex(3).dimension == 3
        with pytest.raises(PreconditionError):
            cycle_complex(2)


class TestBundles:

    def test_random_hermitian_has_the_requested_norm(self, rng):
        h = random_hermitian(3, rng, 0.25)
        assert np.allclose(h, h.conj().T)
        assert op_norm(h) == pytest.approx(0.25)

    def test_non_unitary_holonomy_is_refused(self):
        with pytest.raises(PreconditionError):
            circle_with_holonomy(2 * np.eye(2))


class TestMonopole:

    def test_octant_area(self):
        assert girard_area(OCTANT) == pytest.approx(math.pi / 2)
        assert float(spherical_area(*OCTANT)) == pytest.approx(math.pi / 2)
        assert float(spherical_area(OCTANT[0], OCTANT[2], OCTANT[1])) == pytest.approx(-math.pi / 2)

    def test_degenerate_triangle_is_refused(self):
        with pytest.raises(ComplexError):
            girard_area((OCTANT[0], OCTANT[1], OCTANT[0]))

    def test_octant_holonomy(self):
        assert holonomy_oracle(OCTANT, 2) == pytest.approx(1j)
        assert holonomy_oracle(OCTANT, 0) == pytest.approx(1.0)

    @pytest.mark.parametrize("q", [-1, 1, 3])
    def test_face_transport_matches_the_oracle(self, octahedron, q):
        bundle = monopole_bundle(octahedron, q, depth=2)
        coordinates = sphere_coordinates(octahedron)
        for triangle in octahedron.simplices_of_dimension(2):
            a, b, c = octahedron.oriented_vertices(triangle)
            transport = path_transport(bundle, SimplicialPath((a, b, c, a))).matrix[0, 0]
            assert transport == pytest.approx(holonomy_oracle(coordinates[[a, b, c]], q))

    def test_monopole_is_a_cocycle(self):
        bundle = monopole_bundle(sphere_complex(1), 2, depth=3)
        assert cocycle_check(bundle).passed
        assert flatness_audit(bundle).epsilon > 0.0
        assert curvature_ratio(bundle, 2) == pytest.approx(flatness_audit(bundle).epsilon)

    def test_large_charges_are_refused(self, octahedron):
        with pytest.raises(PreconditionError):
            monopole_bundle(octahedron, 5)

    @pytest.mark.parametrize("q", [1, 2])
    def test_flatness_shrinks_fourfold_under_refinement(self, q):
        coarse = flatness_audit(monopole_bundle(sphere_complex(1), q, depth=2)).epsilon
        fine = flatness_audit(monopole_bundle(sphere_complex(2), q, depth=2)).epsilon
        assert 3.5 <= coarse / fine <= 4.5

    @pytest.mark.parametrize("q", [-2, -1, 1, 2])
    def test_face_defects_are_bounded_by_the_enclosed_flux(self, q):
        sphere = sphere_complex(2)
        bundle = monopole_bundle(sphere, q, depth=2)
        coordinates = sphere_coordinates(sphere)
        for triangle in sphere.simplices_of_dimension(2):
            a, b, c = sphere.oriented_vertices(triangle)
            defect = abs(path_transport(bundle, SimplicialPath((a, b, c, a))).matrix[0, 0] - 1)
            assert defect <= abs(q) * girard_area(coordinates[[a, b, c]]) / 2 + 1e-12

import math

import numpy as np
import pytest

from almostflat.errors import ComplexError
from almostflat.fixtures import cycle_complex, simplex_complex
from almostflat.simplicial import (
    BarycenterMap,
    Move,
    MoveKind,
    SimplicialMap,
    SimplicialPath,
    TreeLoopGenerator,
    adjacent_pairs,
    apply_witness,
    barycentric_subdivide,
    bfs_contraction_witness,
    boundary_indices,
    build_complex,
    contraction_witness_in_tree,
    face_indices,
    face_witness,
    free_reduce,
    kuhn_weights,
    last_vertex_map,
    lattice_points,
    maximal_tree,
    permutation_sign,
    point_distance,
    presentation_from_tree,
    skeleton,
    tree_path
)


class TestComplex:

    def test_closure_of_a_triangle(self):
        x = build_complex([(0, 1, 2)])
        assert len(x) == 7
        assert x.dimension == 2
        assert x.euler_characteristic() == 1

    def test_missing_faces_are_refused(self):
        from almostflat.simplicial import Complex
        with pytest.raises(ComplexError):
            Complex(vertices=(0, 1), simplices=((0,), (0, 1)))

    def test_repeated_vertices_are_refused(self):
        with pytest.raises(ComplexError):
            build_complex([(0, 0, 1)])

    def test_torus_counts(self, torus):
        assert len(torus.vertices) == 7
        assert len(torus.edges) == 21
        assert len(torus.simplices_of_dimension(2)) == 14
        assert torus.euler_characteristic() == 0
        assert torus.is_closed_oriented_surface()

    def test_flipping_one_face_breaks_the_orientation(self, torus):
        flipped = tuple((s, -sign if i == 0 else sign) for i, (s, sign) in enumerate(torus.orientation))
        with pytest.raises(ComplexError, match="Edge"):
            build_complex(torus.simplices_of_dimension(2), orientation=flipped)

    def test_an_edge_borders_at_most_two_oriented_triangles(self):
        faces = [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
        with pytest.raises(ComplexError, match=r"Edge \(0, 1\)"):
            build_complex(faces, orientation=[(f, 1) for f in faces])

    def test_an_oriented_disc_is_not_a_closed_surface(self):
        x = build_complex([(0, 1, 2), (0, 2, 3)], orientation=[((0, 1, 2), 1), ((0, 2, 3), 1)])
        assert x.orientation is not None
        assert not x.is_closed_oriented_surface()

    def test_skeleton(self, torus):
        one = skeleton(torus, 1)
        assert one.dimension == 1
        assert len(one) == 28

    def test_permutation_sign(self):
        assert permutation_sign((0, 1, 2)) == 1
        assert permutation_sign((1, 0, 2)) == -1
        assert permutation_sign((1, 2, 0)) == 1

    def test_full_subcomplex(self, torus):
        sub = torus.full_subcomplex([0, 1, 3])
        assert (0, 1, 3) in sub
        assert len(sub.vertices) == 3


class TestLattice:

    def test_lattice_counts(self):
        assert len(lattice_points(2, 4)) == 15
        assert len(boundary_indices(2, 4)) == 12
        assert len(lattice_points(0, 4)) == 1
        assert boundary_indices(0, 4) == ()

    def test_lattice_is_lexicographic(self):
        points = lattice_points(1, 3)
        assert list(points) == sorted(points)
        assert all(sum(p) == 3 for p in points)

    def test_adjacent_points_are_at_the_lattice_step(self):
        points = lattice_points(2, 4)
        first, second = adjacent_pairs(2, 4)
        for i, j in zip(first, second):
            assert point_distance(points[i], points[j], 4) == pytest.approx(math.sqrt(2) / 4)

    def test_face_indices_select_the_face_points(self):
        points = lattice_points(2, 4)
        on_edge = [points[i] for i in face_indices((0, 2), (0, 1, 2), 4)]
        assert len(on_edge) == 5
        assert all(p[1] == 0 for p in on_edge)

    def test_kuhn_weights_at_a_lattice_point(self):
        weights = kuhn_weights((0.25, 0.75), 4)
        assert len(weights) == 1
        assert weights[0][0] == (1, 3)

    def test_kuhn_weights_interpolate(self):
        x = np.array([0.3, 0.3, 0.4])
        weights = kuhn_weights(x, 4)
        assert sum(w for _, w in weights) == pytest.approx(1.0)
        blended = sum(w * np.asarray(p, dtype=float) / 4 for p, w in weights)
        assert np.allclose(blended, x)


class TestSubdivision:

    def test_subdivided_triangle(self):
        subdivision, _ = barycentric_subdivide(simplex_complex(2))
        assert len(subdivision.vertices) == 7
        assert len(subdivision.simplices_of_dimension(2)) == 6
        assert subdivision.euler_characteristic() == 1

    def test_subdivided_torus_stays_an_oriented_surface(self, torus):
        subdivision, _ = barycentric_subdivide(torus)
        assert subdivision.is_closed_oriented_surface()
        assert len(subdivision.simplices_of_dimension(2)) == 6 * 14

    def test_barycenter_map_inverts(self):
        chain = ((0,), (0, 1), (0, 1, 2))
        top, weights = BarycenterMap(simplex_complex(2))(chain, (1, 1, 2))
        back_chain, back_weights = BarycenterMap.inverse(top, np.asarray(weights) * 4)
        assert top == (0, 1, 2)
        assert back_chain == chain
        assert np.allclose(np.asarray(back_weights) / np.sum(back_weights), np.array([1, 1, 2]) / 4)


class TestPaths:

    def test_tree_path(self):
        tree = [(0, 1), (1, 2), (2, 3)]
        assert tree_path(tree, 0, 3).vertices == (0, 1, 2, 3)
        assert tree_path(tree, 3, 3).vertices == (3,)

    def test_maximal_tree_spans(self, torus):
        tree = maximal_tree(torus)
        assert len(tree) == len(torus.vertices) - 1

    def test_path_validation(self, square):
        with pytest.raises(ComplexError):
            SimplicialPath((1, 3)).validate(square)

    def test_free_reduction(self):
        reduced, moves = free_reduce((0, 1, 2, 1, 0))
        assert reduced == (0,)
        assert len(moves) == 2

    def test_backtrack_moves(self, square):
        loop = Move(MoveKind.BACKTRACK_INSERT, (0, 1), 0).apply((0,), square)
        assert loop == (0, 1, 0)
        assert Move(MoveKind.BACKTRACK_DELETE, (0, 1), 0).apply(loop, square) == (0,)

    def test_moves_must_cite_simplices(self, square):
        with pytest.raises(ComplexError):
            Move(MoveKind.TRIANGLE_INSERT, (0, 1, 3), 0).apply((0,), square)

    def test_tree_loops_contract_without_triangles(self, square):
        witness = contraction_witness_in_tree(SimplicialPath((0, 1, 2, 1, 0)), square)
        assert witness.complexity == 0
        assert apply_witness(SimplicialPath((0, 1, 2, 1, 0)), witness, square).valid

    def test_face_witness(self, square):
        loop = SimplicialPath((0, 1, 2, 0))
        witness = face_witness(square, (0, 1, 2))
        report = apply_witness(loop, witness, square)
        assert report.valid
        assert report.complexity == 1

    def test_searched_witness_contracts_the_square_boundary(self, square):
        loop = SimplicialPath((0, 1, 2, 3, 0))
        witness = bfs_contraction_witness(loop, square)
        report = apply_witness(loop, witness, square)
        assert report.valid
        assert report.complexity == 2

    def test_search_fails_on_non_contractible_loops(self):
        with pytest.raises(ComplexError):
            bfs_contraction_witness(SimplicialPath((0, 1, 2, 3, 0)), cycle_complex(4), max_states=1000)


class TestPresentation:

    def test_torus_presentation_counts(self, torus):
        presentation = presentation_from_tree(torus)
        assert len(presentation.generators) == 15
        assert len(presentation.relations) == 14
        matrix = presentation.abelianized_relation_matrix()
        assert len(presentation.generators) - np.linalg.matrix_rank(matrix) == 2

    def test_generator_loops_cross_their_edge(self, torus):
        presentation = presentation_from_tree(torus)
        for loop, (a, b) in zip(presentation.generator_loops, presentation.generator_edges):
            assert loop.is_closed
            assert (a, b) in loop.steps()

    def test_relations_expand_to_contractible_loops(self, square):
        presentation = presentation_from_tree(square)
        for relation in presentation.relations:
            loop = presentation.expand_word(relation)
            assert apply_witness(loop, bfs_contraction_witness(loop, square), square).valid

    def test_circle_has_one_free_generator(self):
        presentation = presentation_from_tree(cycle_complex(5))
        assert len(presentation.generators) == 1
        assert presentation.relations == ()


class TestMaps:

    def test_tree_loop_generator_yields_one_loop_per_non_tree_edge(self, torus):
        tree = maximal_tree(torus)
        loops = list(TreeLoopGenerator(torus, tree=tree))
        assert len(loops) == 21 - 6
        for (x, y), loop in loops:
            assert loop.vertices[:2] == (x, y)
            assert loop.is_closed

    def test_simplicial_maps_must_send_simplices_to_simplices(self):
        with pytest.raises(ComplexError):
            SimplicialMap(simplex_complex(1), build_complex([(0,), (1,)]), {0: 0, 1: 1})

    def test_last_vertex_map(self):
        triangle = simplex_complex(2)
        last_vertex = last_vertex_map(triangle)
        assert last_vertex.source == barycentric_subdivide(triangle)[0]
        assert last_vertex((0, 1)) == 1
        assert last_vertex.image(((0,), (0, 1), (0, 1, 2))) == (0, 1, 2)
        assert last_vertex.image(((1,), (0, 1))) == (1,)
        assert not last_vertex.is_nondegenerate()
        assert SimplicialMap.identity(triangle).compose(last_vertex)((0, 2)) == 2

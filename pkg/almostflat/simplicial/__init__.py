from .complex import (
    BarycenterMap,
    Complex,
    Simplex,
    SimplicialMap,
    Vertex,
    barycentric_subdivide,
    build_complex,
    last_vertex_map,
    permutation_sign,
    proper_faces,
    simplex_key,
    skeleton,
    star_subcomplex
)
from .lattice import (
    LatticePoint,
    adjacent_pairs,
    boundary_indices,
    embed_coords,
    face_indices,
    kuhn_weights,
    lattice_index,
    lattice_points,
    point_distance,
    radial_parameter
)
from .loop_generator import TreeLoopGenerator
from .paths import (
    ContractionWitness,
    Move,
    MoveKind,
    SimplicialPath,
    WitnessReport,
    apply_witness,
    bfs_contraction_witness,
    contraction_witness_in_tree,
    face_loop,
    face_witness,
    free_reduce,
    maximal_tree,
    optional_basepoint,
    tree_path
)
from .presentation import Letter, Presentation, Word, invert_word, presentation_from_tree

from .bundles import circle_with_holonomy, random_flat_bundle, random_hermitian
from .complexes import (
    circle_covering,
    cycle_complex,
    filled_square,
    hexagon_circle,
    lattice_torus,
    simplex_complex,
    sphere_complex,
    sphere_coordinates,
    torus_complex,
    torus_double_cover,
    torus_loop_class,
    torus_substitution
)
from .monopole import curvature_ratio, girard_area, holonomy_oracle, monopole_bundle, spherical_area

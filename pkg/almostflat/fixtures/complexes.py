"""
    @file:              complexes.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the fixture complexes: the 7-vertex torus and its lattice covers, the
                        subdivided octahedral sphere with vertex coordinates on the unit sphere, simplices, cycles and
                        the filled square.
"""

from functools import lru_cache
import logging
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import ComplexError, PreconditionError
from ..simplicial import Complex, Presentation, SimplicialMap, SimplicialPath, Word, build_complex, permutation_sign

logger = logging.getLogger(__name__)

TORUS_VERTICES = 7
TORUS_PERIODS = ((3, -1), (1, 2))
TORUS_STEPS = {1: (1, 0), 6: (-1, 0), 3: (0, 1), 4: (0, -1), 2: (-1, 1), 5: (1, -1)}


def _oriented_complex(oriented_faces: Sequence[Tuple[int, ...]], vertices=None) -> Complex:
    return build_complex(
        oriented_faces,
        vertices=vertices,
        orientation=[(tuple(sorted(f)), permutation_sign(f)) for f in oriented_faces]
    )


def torus_complex() -> Complex:
    """
    The 7-vertex torus, Z^2 modulo the periods (3, -1) and (1, 2) with the point (x, y) labelled (x + 3y) mod 7. The
    faces (i, i + 1, i + 3) and (i, i + 3, i + 2) are listed in their positive orientation.

    Returns
    -------
    torus : Complex
        7 vertices, 21 edges and 14 oriented triangles.
    """
    n = TORUS_VERTICES
    faces = [(i, (i + 1) % n, (i + 3) % n) for i in range(n)] + [(i, (i + 3) % n, (i + 2) % n) for i in range(n)]

    return _oriented_complex(faces)


def torus_loop_class(loop: SimplicialPath) -> Tuple[int, int]:
    """
    Homology class of a closed path on the 7-vertex torus in the basis of the two periods, read from the displacement
    of its lift to Z^2.

    Parameters
    ----------
    loop : SimplicialPath
        Closed path in torus_complex().

    Returns
    -------
    class : Tuple[int, int]
        Coordinates (a, b) with displacement a (3, -1) + b (1, 2).
    """
    if not loop.is_closed:
        raise ComplexError(f"Path {loop.vertices} is not closed.")

    x = y = 0
    for p, q in loop.steps():
        dx, dy = TORUS_STEPS[(q - p) % TORUS_VERTICES]
        x, y = x + dx, y + dy

    return (2 * x - y) // TORUS_VERTICES, (x + 3 * y) // TORUS_VERTICES


def torus_substitution(presentation: Presentation) -> Dict[str, Word]:
    """
    Words over <u, v> for the generators of an edge-path presentation of the 7-vertex torus: a generator of class
    (a, b) goes to v^a u^b.

    Parameters
    ----------
    presentation : Presentation
        Presentation of torus_complex() with generator loops.

    Returns
    -------
    substitution : Dict[str, Word]
        Word per generator.
    """
    substitution = {}
    for label, loop in presentation.loops_by_label.items():
        a, b = torus_loop_class(loop)
        substitution[label] = (("v", 1 if a > 0 else -1),) * abs(a) + (("u", 1 if b > 0 else -1),) * abs(b)

    return substitution


def _lattice_key(x: int, y: int, periods: Tuple[Tuple[int, int], Tuple[int, int]]) -> Tuple[int, int]:
    (ax, ay), (bx, by) = periods
    determinant = ax * by - ay * bx
    return (x * by - y * bx) % abs(determinant), (ax * y - ay * x) % abs(determinant)


def lattice_torus(periods: Tuple[Tuple[int, int], Tuple[int, int]]) -> Tuple[Complex, Dict[int, Tuple[int, int]]]:
    """
    Torus Z^2 modulo a sublattice, triangulated by the images of the triangles (p, p + (1, 0), p + (0, 1)) and
    (p, p + (0, 1), p + (-1, 1)).

    Parameters
    ----------
    periods : Tuple[Tuple[int, int], Tuple[int, int]]
        Generators of the sublattice.

    Returns
    -------
    torus : Complex
        Oriented torus.
    representatives : Dict[int, Tuple[int, int]]
        A point of Z^2 for each vertex.
    """
    (ax, ay), (bx, by) = periods
    determinant = abs(ax * by - ay * bx)
    if determinant == 0:
        raise ComplexError(f"Periods {periods} are linearly dependent.")

    representatives: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for x in range(determinant):
        for y in range(determinant):
            representatives.setdefault(_lattice_key(x, y, periods), (x, y))
    labels = {key: i for i, key in enumerate(sorted(representatives))}

    def label(x: int, y: int) -> int:
        return labels[_lattice_key(x, y, periods)]

    faces = []
    for x, y in representatives.values():
        faces.append((label(x, y), label(x + 1, y), label(x, y + 1)))
        faces.append((label(x, y), label(x, y + 1), label(x - 1, y + 1)))
    for face in faces:
        if len(set(face)) < 3:
            raise ComplexError(f"Periods {periods} give a degenerate triangle {face}.")

    torus = _oriented_complex(faces)
    if len(torus.simplices_of_dimension(2)) != len(faces):
        raise ComplexError(f"Periods {periods} identify distinct triangles.")

    return torus, {labels[key]: point for key, point in representatives.items()}


def torus_double_cover() -> SimplicialMap:
    """
    Orientation preserving degree 2 covering of the 7-vertex torus by the torus of periods 2 (3, -1) and (1, 2).

    Returns
    -------
    cover : SimplicialMap
        Covering map onto torus_complex().
    """
    (ax, ay), period = TORUS_PERIODS
    cover, representatives = lattice_torus(((2 * ax, 2 * ay), period))
    vertex_map = {v: (x + 3 * y) % TORUS_VERTICES for v, (x, y) in representatives.items()}

    return SimplicialMap(cover, torus_complex(), vertex_map)


@lru_cache(maxsize=8)
def _sphere_mesh(depth: int) -> Tuple[Tuple[Tuple[int, int, int], ...], np.ndarray]:
    points: List[np.ndarray] = list(np.vstack([np.eye(3), -np.eye(3)])[[0, 3, 1, 4, 2, 5]])
    faces = [(x, y, z) for x in (0, 1) for y in (2, 3) for z in (4, 5)]
    faces = [f if np.linalg.det(np.array([points[v] for v in f])) > 0 else (f[1], f[0], f[2]) for f in faces]

    for _ in range(depth):
        midpoints: Dict[Tuple[int, int], int] = {}

        def midpoint(a: int, b: int) -> int:
            key = (min(a, b), max(a, b))
            if key not in midpoints:
                m = points[a] + points[b]
                points.append(m / np.linalg.norm(m))
                midpoints[key] = len(points) - 1
            return midpoints[key]

        refined = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            refined.extend([(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)])
        faces = refined

    return tuple(faces), np.array(points)


def sphere_complex(depth: int = 0) -> Complex:
    """
    Octahedron with its faces split in four depth times, new vertices pushed to the unit sphere. Faces are positively
    oriented when their vertices run counterclockwise seen from outside.

    Parameters
    ----------
    depth : int
        Number of subdivisions.

    Returns
    -------
    sphere : Complex
        Oriented sphere with 8 * 4^depth triangles.
    """
    if depth < 0:
        raise PreconditionError(f"Subdivision depth must be non-negative, got {depth}.")

    faces, _ = _sphere_mesh(depth)
    return _oriented_complex(faces)


def sphere_coordinates(sphere: Complex) -> np.ndarray:
    """
    Unit vectors of the vertices of a sphere_complex, indexed by vertex.

    Parameters
    ----------
    sphere : Complex
        A complex returned by sphere_complex.

    Returns
    -------
    coordinates : np.ndarray
        Array of shape (vertices, 3).
    """
    triangles = len(sphere.simplices_of_dimension(2))
    depth = round(math.log(max(triangles, 1) / 8, 4)) if triangles >= 8 else -1
    if depth < 0 or 8 * 4 ** depth != triangles:
        raise ComplexError(f"A complex with {triangles} triangles is not a subdivided octahedron.")

    _, points = _sphere_mesh(depth)
    if len(points) != len(sphere.vertices):
        raise ComplexError("Vertex count does not match the subdivided octahedron.")

    return points


def simplex_complex(n: int) -> Complex:
    """
    The full n-simplex on the vertices 0, ..., n.
    """
    if n < 0:
        raise PreconditionError(f"Simplex dimension must be non-negative, got {n}.")

    return build_complex([tuple(range(n + 1))])


def cycle_complex(n: int) -> Complex:
    """
    Triangulated circle with n >= 3 vertices.
    """
    if n < 3:
        raise PreconditionError(f"A triangulated circle has at least 3 vertices, got {n}.")

    return build_complex([(i, (i + 1) % n) for i in range(n)])


def hexagon_circle() -> Complex:
    return cycle_complex(6)


def filled_square() -> Complex:
    """
    Square 0-1-2-3 filled by the triangles (0, 1, 2) and (0, 2, 3).
    """
    return _oriented_complex([(0, 1, 2), (0, 2, 3)])


def circle_covering(n: int, degree: int) -> SimplicialMap:
    """
    Degree d covering of the n-vertex circle by the (d n)-vertex circle, i -> i mod n.

    Parameters
    ----------
    n : int
        Vertices of the covered circle.
    degree : int
        Positive degree.

    Returns
    -------
    cover : SimplicialMap
        Covering map.
    """
    if degree < 1:
        raise PreconditionError(f"Covering degree must be positive, got {degree}.")

    source = cycle_complex(n * degree)
    return SimplicialMap(source, cycle_complex(n), {i: i % n for i in source.vertices})

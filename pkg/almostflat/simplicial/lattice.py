"""
    @file:              lattice.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the barycentric lattices used to sample maps on simplices. The lattice
                        of depth m on a k-simplex is the set of non-negative integer vectors of length k + 1 summing
                        to m, listed in lexicographic order. Distances are taken in the standard-simplex metric, in
                        which two vertices lie at distance sqrt(2).
"""

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from attrs import field, frozen
import numpy as np

from ..errors import ComplexError
from .complex import Simplex

Coords = Tuple[int, ...]


@frozen
class LatticePoint:
    """
    A point of the depth-m lattice of a simplex, given by integer barycentric numerators summing to m.
    """
    simplex: Simplex
    coords: Coords = field(converter=tuple)

    def __attrs_post_init__(self):
        if len(self.coords) != len(self.simplex) or any(c < 0 for c in self.coords):
            raise ComplexError(f"Invalid lattice coordinates {self.coords} on {self.simplex}.")

    @property
    def depth(self) -> int:
        """
        Common denominator of the coordinates.

        Returns
        -------
        depth : int
            Sum of the numerators.
        """
        return sum(self.coords)

    @property
    def barycentric(self) -> np.ndarray:
        """
        Barycentric coordinates as floats summing to one.

        Returns
        -------
        barycentric : np.ndarray
            Coordinates divided by the depth.
        """
        return np.asarray(self.coords, dtype=float) / self.depth


@lru_cache(maxsize=None)
def lattice_points(k: int, m: int) -> Tuple[Coords, ...]:
    """
    Lattice of depth m on a k-simplex in lexicographic order.

    Parameters
    ----------
    k : int
        Simplex dimension.
    m : int
        Depth.

    Returns
    -------
    points : Tuple[Coords, ...]
        Compositions of m into k + 1 non-negative parts.
    """
    if k == 0:
        return ((m,),)

    return tuple((first,) + rest for first in range(m + 1) for rest in lattice_points(k - 1, m - first))


@lru_cache(maxsize=None)
def lattice_index(k: int, m: int) -> Dict[Coords, int]:
    """
    Position of each lattice point in lattice_points(k, m).

    Parameters
    ----------
    k : int
        Simplex dimension.
    m : int
        Depth.

    Returns
    -------
    index : Dict[Coords, int]
        Coordinates to position.
    """
    return {p: i for i, p in enumerate(lattice_points(k, m))}


@lru_cache(maxsize=None)
def boundary_indices(k: int, m: int) -> Tuple[int, ...]:
    """
    Positions of the boundary lattice points, those with a zero coordinate. A 0-simplex has an empty boundary.

    Parameters
    ----------
    k : int
        Simplex dimension.
    m : int
        Depth.

    Returns
    -------
    indices : Tuple[int, ...]
        Boundary positions in lattice order.
    """
    if k == 0:
        return ()

    return tuple(i for i, p in enumerate(lattice_points(k, m)) if min(p) == 0)


@lru_cache(maxsize=None)
def adjacent_pairs(k: int, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Lattice-adjacent pairs (i, j), i < j, whose coordinates differ by e_a - e_b. Adjacent points lie at distance
    sqrt(2)/m.

    Parameters
    ----------
    k : int
        Simplex dimension.
    m : int
        Depth.

    Returns
    -------
    (first, second) : Tuple[np.ndarray, np.ndarray]
        Index arrays of equal length.
    """
    index = lattice_index(k, m)
    first, second = [], []
    for i, p in enumerate(lattice_points(k, m)):
        for b in range(k + 1):
            if p[b] == 0:
                continue
            for a in range(k + 1):
                if a == b:
                    continue
                q = list(p)
                q[a] += 1
                q[b] -= 1
                j = index[tuple(q)]
                if j > i:
                    first.append(i)
                    second.append(j)

    return np.array(first, dtype=int), np.array(second, dtype=int)


def point_distance(p: Sequence[float], q: Sequence[float], m: int) -> float:
    """
    Standard-simplex distance between two lattice points of depth m.

    Parameters
    ----------
    p : Sequence[float]
        Numerators of the first point.
    q : Sequence[float]
        Numerators of the second point.
    m : int
        Depth.

    Returns
    -------
    distance : float
        Euclidean distance of the barycentric coordinate vectors.
    """
    return float(np.linalg.norm(np.subtract(p, q, dtype=float)) / m)


def embed_coords(face: Simplex, simplex: Simplex, coords: Sequence[int]) -> Coords:
    """
    Coordinates on a simplex of a point given on one of its faces.

    Parameters
    ----------
    face : Simplex
        A face of simplex.
    simplex : Simplex
        Containing simplex.
    coords : Sequence[int]
        Coordinates on the face.

    Returns
    -------
    coords : Coords
        Coordinates on the simplex, zero off the face.
    """
    embedded = [0] * len(simplex)
    for v, c in zip(face, coords):
        embedded[simplex.index(v)] = c

    return tuple(embedded)


@lru_cache(maxsize=None)
def face_indices(face: Simplex, simplex: Simplex, m: int) -> Tuple[int, ...]:
    """
    Positions in the lattice of simplex of the lattice points of face, in the face's lattice order.

    Parameters
    ----------
    face : Simplex
        A face of simplex.
    simplex : Simplex
        Containing simplex.
    m : int
        Depth.

    Returns
    -------
    indices : Tuple[int, ...]
        Positions in lattice_points(dim simplex, m).
    """
    if not set(face) <= set(simplex):
        raise ComplexError(f"{face} is not a face of {simplex}.")

    index = lattice_index(len(simplex) - 1, m)

    return tuple(index[embed_coords(face, simplex, p)] for p in lattice_points(len(face) - 1, m))


def radial_parameter(coords: Sequence[int], m: int) -> float:
    """
    Radial parameter t = 1 - (k + 1) min(coords) / m, zero at the barycenter and one on the boundary.

    Parameters
    ----------
    coords : Sequence[int]
        Lattice coordinates.
    m : int
        Depth.

    Returns
    -------
    t : float
        Radial parameter in [0, 1].
    """
    return 1.0 - len(coords) * min(coords) / m


def kuhn_weights(x: Sequence[float], m: int) -> List[Tuple[Coords, float]]:
    """
    Piecewise-linear interpolation weights of an arbitrary point of a simplex on the depth-m lattice. The point is
    located in the Freudenthal triangulation of the lattice, read in cumulative coordinates
    z_i = m (x_0 + ... + x_{i-1}), and the weights are its barycentric coordinates in the cell containing it. A lattice
    point gets itself with weight one.

    Parameters
    ----------
    x : Sequence[float]
        Barycentric coordinates, non-negative, of any positive total.
    m : int
        Depth.

    Returns
    -------
    weights : List[Tuple[Coords, float]]
        Lattice points with positive weights summing to one.
    """
    x = np.clip(np.asarray(x, dtype=float), 0.0, None)
    x = x / x.sum()
    k = len(x) - 1
    if k == 0:
        return [((m,), 1.0)]

    z = np.clip(np.maximum.accumulate(m * np.cumsum(x)[:-1]), 0.0, float(m))
    nearest = np.rint(z)
    z = np.where(np.abs(z - nearest) < 1e-12, nearest, z)
    floor = np.floor(z)
    fraction = z - floor

    # descending fraction, later index first on ties so cumulative coordinates stay non-decreasing
    order = sorted(range(k), key=lambda i: (-fraction[i], -i))
    sorted_fraction = [fraction[i] for i in order] + [0.0]

    weights = []
    vertex = floor.copy()
    weight = 1.0 - sorted_fraction[0]
    if weight > 0:
        weights.append((_from_cumulative(vertex, m), weight))
    for j, i in enumerate(order):
        vertex[i] += 1
        weight = sorted_fraction[j] - sorted_fraction[j + 1]
        if weight > 0:
            weights.append((_from_cumulative(vertex, m), weight))

    return weights


def _from_cumulative(z: np.ndarray, m: int) -> Coords:
    cumulative = [0] + [int(c) for c in z] + [m]
    return tuple(cumulative[i + 1] - cumulative[i] for i in range(len(cumulative) - 1))

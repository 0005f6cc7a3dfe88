"""
    @file:              unitary_map.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the SampledMap and SampledUnitaryMap classes, matrix-valued maps on a simplex
                        known at the points of its barycentric lattice (or of the boundary of that lattice), together
                        with their Lipschitz estimates, restrictions to faces and off-lattice evaluation.
"""

from itertools import combinations
import logging
from typing import List, Sequence, Tuple

from attrs import field, frozen
import numpy as np

from ..errors import ComplexError, MismatchError, PreconditionError
from ..matrixcore import dagger, op_norms, polar_project, unitarity_residual
from ..simplicial import (
    Simplex,
    adjacent_pairs,
    boundary_indices,
    face_indices,
    kuhn_weights,
    lattice_index,
    lattice_points,
    point_distance
)

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-8


def _as_stack(values) -> np.ndarray:
    values = np.array(values, dtype=complex)
    if values.ndim != 3 or values.shape[1] != values.shape[2]:
        raise MismatchError(f"Expected a stack of square matrices, got shape {values.shape}.")

    return values


@frozen(eq=False)
class SampledMap:
    """
    A matrix-valued map on a simplex known at every lattice point of depth `depth`, or only at the boundary lattice
    points when `boundary_only` is set. Values are stored in lattice order.
    """
    simplex: Simplex = field(converter=tuple)
    depth: int
    values: np.ndarray = field(converter=_as_stack)
    boundary_only: bool = field(default=False)

    def __attrs_post_init__(self):
        if self.depth < 1:
            raise MismatchError(f"Lattice depth must be positive, got {self.depth}.")
        if self.boundary_only and self.dimension == 0:
            raise ComplexError("A 0-simplex has no boundary to sample.")
        if len(self.values) != len(self.indices):
            raise MismatchError(
                f"Expected {len(self.indices)} values on {self.simplex} at depth {self.depth}, got {len(self.values)}."
            )
        self.values.setflags(write=False)

    @property
    def dimension(self) -> int:
        """
        Dimension of the simplex.

        Returns
        -------
        dimension : int
            k.
        """
        return len(self.simplex) - 1

    @property
    def rank(self) -> int:
        """
        Size of the matrices.

        Returns
        -------
        rank : int
            n.
        """
        return self.values.shape[-1]

    @property
    def indices(self) -> Tuple[int, ...]:
        """
        Positions of the sampled points in the full lattice of the simplex.

        Returns
        -------
        indices : Tuple[int, ...]
            Lattice positions.
        """
        if self.boundary_only:
            return boundary_indices(self.dimension, self.depth)

        return tuple(range(len(lattice_points(self.dimension, self.depth))))

    @property
    def points(self) -> List[Tuple[int, ...]]:
        """
        Coordinates of the sampled points.

        Returns
        -------
        points : List[Tuple[int, ...]]
            Lattice coordinates in storage order.
        """
        lattice = lattice_points(self.dimension, self.depth)
        return [lattice[i] for i in self.indices]

    def value_at(self, coords: Sequence[int]) -> np.ndarray:
        """
        Stored value at a lattice point.

        Parameters
        ----------
        coords : Sequence[int]
            Lattice coordinates.

        Returns
        -------
        value : np.ndarray
            Matrix.
        """
        position = lattice_index(self.dimension, self.depth).get(tuple(coords))
        if position is None:
            raise ComplexError(f"{tuple(coords)} is not a lattice point of depth {self.depth} on {self.simplex}.")
        if self.boundary_only:
            try:
                position = self.indices.index(position)
            except ValueError as e:
                raise ComplexError(f"{tuple(coords)} is not a boundary lattice point.") from e

        return self.values[position]

    def lipschitz_estimate(self) -> float:
        """
        Largest ratio ||f(x) - f(y)|| / d(x, y) over lattice-adjacent sampled pairs. When no two sampled points are
        adjacent, every pair is used.

        Returns
        -------
        estimate : float
            Lower bound of the Lipschitz constant of any interpolant.
        """
        if len(self.values) < 2:
            raise PreconditionError(f"A Lipschitz estimate needs two sample points, {self.simplex} has one.")

        first, second = adjacent_pairs(self.dimension, self.depth)
        if self.boundary_only:
            storage = {full: i for i, full in enumerate(self.indices)}
            kept = [(storage[i], storage[j]) for i, j in zip(first, second) if i in storage and j in storage]
            first = np.array([i for i, _ in kept], dtype=int)
            second = np.array([j for _, j in kept], dtype=int)

        if first.size:
            step = np.sqrt(2) / self.depth
            return float(op_norms(self.values[first] - self.values[second]).max() / step)

        points = self.points
        pairs = list(combinations(range(len(points)), 2))
        distances = np.array([point_distance(points[i], points[j], self.depth) for i, j in pairs])
        differences = op_norms(np.array([self.values[i] - self.values[j] for i, j in pairs]))

        return float((differences / distances).max())

    def diameter(self) -> float:
        """
        Largest distance between two sampled values.

        Returns
        -------
        diameter : float
            max ||f(x) - f(y)||.
        """
        values = self.values
        if len(values) < 2:
            return 0.0

        first, second = np.triu_indices(len(values), k=1)
        return float(op_norms(values[first] - values[second]).max())

    def restrict(self, face: Simplex) -> "SampledMap":
        """
        Exact sub-selection of the values on a face.

        Parameters
        ----------
        face : Simplex
            A face of the simplex, proper when the map is boundary-only.

        Returns
        -------
        restriction : SampledMap
            Map of the same class on the face.
        """
        face = tuple(face)
        full_positions = face_indices(face, self.simplex, self.depth)
        if self.boundary_only:
            if face == self.simplex:
                raise ComplexError("A boundary-only map cannot be restricted to its whole simplex.")
            storage = {full: i for i, full in enumerate(self.indices)}
            positions = [storage[i] for i in full_positions]
        else:
            positions = list(full_positions)

        return type(self)(simplex=face, depth=self.depth, values=self.values[positions])

    def boundary(self) -> "SampledMap":
        """
        Restriction of a full map to its boundary lattice points.

        Returns
        -------
        boundary : SampledMap
            Boundary-only map.
        """
        if self.boundary_only:
            return self

        return type(self)(
            simplex=self.simplex,
            depth=self.depth,
            values=self.values[list(boundary_indices(self.dimension, self.depth))],
            boundary_only=True
        )

    def conjugate_transpose(self) -> "SampledMap":
        """
        Pointwise adjoint.

        Returns
        -------
        adjoint : SampledMap
            x -> f(x)*.
        """
        return type(self)(self.simplex, self.depth, dagger(self.values), self.boundary_only)

    def evaluate(self, coords: Sequence[float]) -> np.ndarray:
        """
        Value at an arbitrary point: piecewise-linear interpolation on the Freudenthal cells of the lattice, projected
        back to the unitary group for unitary maps. Lattice points return their stored value unchanged.

        Parameters
        ----------
        coords : Sequence[float]
            Barycentric coordinates, any positive total.

        Returns
        -------
        value : np.ndarray
            Matrix.
        """
        if self.boundary_only:
            raise ComplexError("Off-lattice evaluation needs a map sampled on the whole simplex.")
        if len(coords) != len(self.simplex):
            raise MismatchError(f"Expected {len(self.simplex)} barycentric coordinates, got {len(coords)}.")

        index = lattice_index(self.dimension, self.depth)
        weights = kuhn_weights(coords, self.depth)
        if len(weights) == 1:
            return self.values[index[weights[0][0]]].copy()

        blended = sum(weight * self.values[index[point]] for point, weight in weights)

        return self._project(blended)

    def _project(self, matrix: np.ndarray) -> np.ndarray:
        return matrix


@frozen(eq=False)
class SampledUnitaryMap(SampledMap):
    """
    A SampledMap whose values are unitary.
    """

    def __attrs_post_init__(self):
        super().__attrs_post_init__()
        residual = unitarity_residual(self.values)
        if residual > UNITARITY_TOL:
            raise PreconditionError(f"Sampled values on {self.simplex} are not unitary: residual {residual:.3g}.")

    def _project(self, matrix: np.ndarray) -> np.ndarray:
        return polar_project(matrix)


def identity_map(simplex: Simplex, depth: int, rank: int) -> SampledUnitaryMap:
    """
    Constant identity map.

    Parameters
    ----------
    simplex : Simplex
        Simplex.
    depth : int
        Lattice depth.
    rank : int
        Matrix size.

    Returns
    -------
    identity : SampledUnitaryMap
        x -> id.
    """
    return constant_map(simplex, depth, np.eye(rank, dtype=complex))


def constant_map(simplex: Simplex, depth: int, value: np.ndarray) -> SampledUnitaryMap:
    """
    Constant map.

    Parameters
    ----------
    simplex : Simplex
        Simplex.
    depth : int
        Lattice depth.
    value : np.ndarray
        Unitary value.

    Returns
    -------
    constant : SampledUnitaryMap
        x -> value.
    """
    count = len(lattice_points(len(simplex) - 1, depth))
    return SampledUnitaryMap(simplex=simplex, depth=depth, values=np.broadcast_to(value, (count,) + np.shape(value)))


def pointwise_product(f: SampledMap, g: SampledMap) -> SampledUnitaryMap:
    """
    The map x -> f(x) g(x).

    Parameters
    ----------
    f : SampledMap
        Left factor.
    g : SampledMap
        Right factor on the same simplex, depth and sampled points.

    Returns
    -------
    product : SampledUnitaryMap
        Pointwise product.
    """
    if f.simplex != g.simplex or f.depth != g.depth or f.boundary_only != g.boundary_only:
        raise MismatchError(
            f"Cannot multiply maps sampled on {f.simplex} and {g.simplex} at depths {f.depth} and {g.depth}."
        )

    return SampledUnitaryMap(f.simplex, f.depth, f.values @ g.values, f.boundary_only)


def from_function(simplex: Simplex, depth: int, function) -> SampledUnitaryMap:
    """
    Samples a unitary-valued function of the barycentric coordinates.

    Parameters
    ----------
    simplex : Simplex
        Simplex.
    depth : int
        Lattice depth.
    function : Callable[[np.ndarray], np.ndarray]
        Function of the barycentric coordinates (summing to one).

    Returns
    -------
    sampled : SampledUnitaryMap
        Sampled map.
    """
    points = lattice_points(len(simplex) - 1, depth)
    return SampledUnitaryMap(simplex, depth, [function(np.asarray(p, dtype=float) / depth) for p in points])

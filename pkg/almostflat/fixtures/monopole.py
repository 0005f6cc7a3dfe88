"""
    @file:              monopole.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the monopole line bundles over the triangulated sphere, built from the
                        trivializations obtained by parallel transport out of each simplex barycenter for a
                        connection of curvature q/2 times the area form, and the closed-form holonomy of spherical
                        triangles.
"""

import logging
import math
from typing import Sequence

import numpy as np

from ..bundle import CocycleBundle, flatness_audit
from ..config import DEFAULT_SETTINGS
from ..errors import ComplexError, PreconditionError
from ..sampled import SampledUnitaryMap, identity_map
from ..simplicial import Complex, Simplex, lattice_points
from .complexes import sphere_coordinates

logger = logging.getLogger(__name__)

MAX_CHARGE = 4
GAUGE_POINT = np.array([0.31, 0.52, 0.79]) / np.linalg.norm([0.31, 0.52, 0.79])


def spherical_area(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """
    Signed area of the spherical triangle (a, b, c), positive when the vertices run counterclockwise seen from outside.
    Broadcasts over leading axes.

    Parameters
    ----------
    a, b, c : np.ndarray
        Unit vectors, shape (..., 3).

    Returns
    -------
    area : np.ndarray
        Signed area in (-2 pi, 2 pi].
    """
    determinant = np.einsum("...i,...i->...", a, np.cross(b, c))
    denominator = 1 + np.einsum("...i,...i->...", a, b) + np.einsum("...i,...i->...", b, c) \
        + np.einsum("...i,...i->...", c, a)

    return 2 * np.arctan2(determinant, denominator)


def _vertex_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    tb, tc = b - np.dot(a, b) * a, c - np.dot(a, c) * a
    cosine = np.dot(tb, tc) / (np.linalg.norm(tb) * np.linalg.norm(tc))
    return float(np.arccos(np.clip(cosine, -1.0, 1.0)))


def girard_area(triangle: Sequence[np.ndarray]) -> float:
    """
    Unsigned area of a spherical triangle, the excess of its angle sum over pi.

    Parameters
    ----------
    triangle : Sequence[np.ndarray]
        Three unit vectors.

    Returns
    -------
    area : float
        Area.
    """
    a, b, c = (np.asarray(v, dtype=float) for v in triangle)
    if abs(np.dot(a, np.cross(b, c))) < 1e-12:
        raise ComplexError("Degenerate spherical triangle.")

    return _vertex_angle(a, b, c) + _vertex_angle(b, c, a) + _vertex_angle(c, a, b) - math.pi


def holonomy_oracle(triangle: Sequence[np.ndarray], q: int) -> complex:
    """
    Holonomy exp(i q/2 A) of the charge q monopole around a spherical triangle, A the area signed by the orientation of
    the vertex order.

    Parameters
    ----------
    triangle : Sequence[np.ndarray]
        Three unit vectors.
    q : int
        Charge.

    Returns
    -------
    holonomy : complex
        Unit complex number.
    """
    a, b, c = (np.asarray(v, dtype=float) for v in triangle)
    area = girard_area((a, b, c)) * math.copysign(1.0, np.dot(a, np.cross(b, c)))

    return complex(np.exp(0.5j * q * area))


def _barycenter(coordinates: np.ndarray, simplex: Simplex) -> np.ndarray:
    center = coordinates[list(simplex)].mean(axis=0)
    return center / np.linalg.norm(center)


def _transition(coordinates: np.ndarray, rho: Simplex, sigma: Simplex, q: int, depth: int) -> SampledUnitaryMap:
    b_rho, b_sigma = _barycenter(coordinates, rho), _barycenter(coordinates, sigma)
    weights = np.asarray(lattice_points(len(rho) - 1, depth), dtype=float) / depth
    points = weights @ coordinates[list(rho)]
    points /= np.linalg.norm(points, axis=1, keepdims=True)

    local = spherical_area(np.broadcast_to(b_rho, points.shape), np.broadcast_to(b_sigma, points.shape), points)
    gauge = spherical_area(GAUGE_POINT, b_rho, b_sigma)
    phases = np.exp(0.5j * q * (local - gauge))

    return SampledUnitaryMap(rho, depth, phases[:, None, None])


def monopole_bundle(sphere: Complex, q: int, depth: int = DEFAULT_SETTINGS.lattice_depth) -> CocycleBundle:
    """
    Line bundle of Chern number q over a sphere_complex. The chart over each simplex is the parallel transport out of
    its barycenter along great circles, so the transition of rho into sigma at x is
    exp(i q/2 A(b_rho, b_sigma, x)) up to a constant phase fixed by a gauge point.

    Parameters
    ----------
    sphere : Complex
        A complex returned by sphere_complex.
    q : int
        Charge, |q| <= 4.
    depth : int
        Lattice depth.

    Returns
    -------
    bundle : CocycleBundle
        Rank 1 bundle whose transport around each face is exp(i q/2 area).
    """
    if abs(q) > MAX_CHARGE:
        raise PreconditionError(f"Monopole charge must satisfy |q| <= {MAX_CHARGE}, got {q}.")

    coordinates = sphere_coordinates(sphere)
    transitions = {}
    for sigma in sphere.simplices:
        for rho in sphere.faces_in(sigma):
            if rho == sigma:
                transitions[(rho, sigma)] = identity_map(rho, depth, 1)
            else:
                transitions[(rho, sigma)] = _transition(coordinates, rho, sigma, q, depth)

    bundle = CocycleBundle(base=sphere, rank=1, depth=depth, transitions=transitions)
    logger.debug(f"Monopole of charge {q} over {len(sphere.simplices_of_dimension(2))} triangles.")

    return bundle


def curvature_ratio(bundle: CocycleBundle, q: int) -> float:
    """
    Flatness of a monopole bundle divided by the norm |q|/2 of its curvature.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle returned by monopole_bundle.
    q : int
        Its non-zero charge.

    Returns
    -------
    ratio : float
        Measured ratio.
    """
    if q == 0:
        raise PreconditionError("The flat monopole has no curvature.")

    return flatness_audit(bundle).epsilon / (abs(q) / 2)

"""
    @file:              extension.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the extension of boundary-sampled maps over a whole simplex: the cone
                        extension of vector-valued maps vanishing at a base point, and the unitary extension obtained by
                        pulling a boundary map to the skew-Hermitian matrices, coning it off and mapping it back.
"""

from enum import Enum
from functools import lru_cache
import logging
from typing import Tuple

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..errors import PreconditionError
from ..matrixcore import dagger, expi_hermitian, op_norms, skew_project, unitarize_g, unitary_log
from ..simplicial import boundary_indices, lattice_points, radial_parameter
from .unitary_map import SampledMap, SampledUnitaryMap

logger = logging.getLogger(__name__)


class ExtensionMethod(Enum):
    SERIES = "series"
    EXPONENTIAL = "exponential"


@lru_cache(maxsize=None)
def cone_sources(k: int, m: int) -> Tuple[Tuple[int, float], ...]:
    """
    For every lattice point of a k-simplex, the boundary point its cone value is read from and the cone factor. Points
    with radial parameter t <= 1/2 get factor 0; other interior points x get factor 2t - 1 and the boundary lattice
    point nearest to c + (x - c)/t, c the barycenter, ties going to the lexicographically least point. Boundary points
    read themselves with factor 1.

    Parameters
    ----------
    k : int
        Simplex dimension, at least one.
    m : int
        Depth.

    Returns
    -------
    sources : Tuple[Tuple[int, float], ...]
        (position in the boundary list, factor) per lattice point.
    """
    points = np.array(lattice_points(k, m), dtype=float)
    boundary = boundary_indices(k, m)
    boundary_points = points[list(boundary)]
    storage = {full: i for i, full in enumerate(boundary)}
    center = np.full(k + 1, m / (k + 1))

    sources = []
    for i, p in enumerate(points):
        if i in storage:
            sources.append((storage[i], 1.0))
            continue
        t = radial_parameter(p, m)
        if t <= 0.5:
            sources.append((0, 0.0))
            continue
        target = center + (p - center) / t
        distances = np.round(np.linalg.norm(boundary_points - target, axis=1), 12)
        sources.append((int(np.argmin(distances)), 2 * t - 1))

    return tuple(sources)


def cone_extend_vector(
        beta0: SampledMap,
        base_index: int = 0,
        radius: float = np.inf,
        tol: float = 1e-12
) -> SampledMap:
    """
    Extends a boundary-sampled matrix-valued map vanishing at a base point over the whole simplex by the cone formula
    x -> (2t - 1) beta0(boundary point of x) for t > 1/2 and 0 on the inner half.

    Parameters
    ----------
    beta0 : SampledMap
        Boundary-only map.
    base_index : int
        Position, in the boundary list, of the point s0 with beta0(s0) = 0.
    radius : float
        Bound on the norms of the boundary values.
    tol : float
        Tolerance on beta0(s0) = 0.

    Returns
    -------
    extension : SampledMap
        Full map equal to beta0 on the boundary, with values in the same ball.
    """
    if not beta0.boundary_only:
        raise PreconditionError("The cone extension expects a boundary-only map.")

    values = beta0.values
    if np.abs(values[base_index]).max() > tol:
        raise PreconditionError("The cone extension needs a boundary value vanishing at the base point.")
    largest = op_norms(values).max()
    if largest > radius:
        raise PreconditionError(f"Boundary values leave the ball of radius {radius}: norm {largest:.6g}.")

    sources = cone_sources(beta0.dimension, beta0.depth)
    extended = np.empty((len(sources),) + values.shape[1:], dtype=complex)
    boundary = set(boundary_indices(beta0.dimension, beta0.depth))
    for i, (source, factor) in enumerate(sources):
        if i in boundary:
            extended[i] = values[source]
        else:
            extended[i] = factor * values[source]

    return SampledMap(simplex=beta0.simplex, depth=beta0.depth, values=extended)


def unitary_extend(
        alpha0: SampledUnitaryMap,
        method: ExtensionMethod = ExtensionMethod.SERIES,
        settings: Settings = DEFAULT_SETTINGS
) -> SampledUnitaryMap:
    """
    Extends a boundary-sampled unitary map over the whole simplex. With u0 = alpha0(s0), s0 the first boundary lattice
    point, the boundary map is moved to alpha1 = skew_project(u0* alpha0), coned off and mapped back by
    v -> u0 (v + (1 + v^2)^(1/2)). Boundary values are kept exactly.

    The exponential method uses alpha1 = log(u0* alpha0) and v -> u0 exp(v) instead. It accepts boundary maps of any
    diameter whose eigenphases relative to u0 stay away from pi.

    Parameters
    ----------
    alpha0 : SampledUnitaryMap
        Boundary-only unitary map on a simplex of dimension at least one.
    method : ExtensionMethod
        Series (default) or exponential chart.
    settings : Settings
        Diameter threshold, tolerances and branch margin.

    Returns
    -------
    extension : SampledUnitaryMap
        Full unitary map agreeing with alpha0 on the boundary lattice.
    """
    method = ExtensionMethod(method)
    if not alpha0.boundary_only:
        raise PreconditionError("The unitary extension expects a boundary-only map.")

    base = alpha0.values[0]
    relative = dagger(base) @ alpha0.values

    if method is ExtensionMethod.SERIES:
        diameter = alpha0.diameter()
        if diameter > settings.extension_diameter:
            raise PreconditionError(
                f"Boundary diameter {diameter:.6g} on {alpha0.simplex} exceeds {settings.extension_diameter}."
            )
        alpha1 = skew_project(relative)
        radius = settings.extension_diameter
    else:
        alpha1 = np.array([unitary_log(u, margin=settings.flux_margin) for u in relative])
        radius = np.inf

    alpha1[0] = 0.0
    cone = cone_extend_vector(SampledMap(alpha0.simplex, alpha0.depth, alpha1, boundary_only=True), radius=radius)

    boundary = boundary_indices(alpha0.dimension, alpha0.depth)
    values = np.empty(cone.values.shape, dtype=complex)
    on_boundary = set(boundary)
    interior = [i for i in range(len(values)) if i not in on_boundary]
    if method is ExtensionMethod.SERIES:
        for i in interior:
            values[i] = base @ unitarize_g(cone.values[i], tol=settings.tol)
    elif interior:
        values[interior] = base @ expi_hermitian(-1j * cone.values[interior])
    values[list(boundary)] = alpha0.values

    logger.debug(f"Extended a boundary map over {alpha0.simplex} at depth {alpha0.depth} ({method.value}).")

    return SampledUnitaryMap(simplex=alpha0.simplex, depth=alpha0.depth, values=values)

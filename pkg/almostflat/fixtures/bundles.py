"""
    @file:              bundles.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains random globally trivial bundles of prescribed flatness and circles with
                        prescribed holonomy.
"""

import math
from typing import Optional

import numpy as np

from ..bundle import CocycleBundle, bundle_from_charts, bundle_from_edge_transports
from ..config import DEFAULT_SETTINGS
from ..errors import PreconditionError
from ..matrixcore import dagger, expi_hermitian, op_norm, unitarity_residual
from ..sampled import SampledUnitaryMap
from ..simplicial import Complex, lattice_points
from .complexes import cycle_complex


def random_hermitian(rank: int, rng: np.random.Generator, norm: float = 1.0) -> np.ndarray:
    """
    Random Hermitian matrix of the given operator norm.

    Parameters
    ----------
    rank : int
        Size.
    rng : np.random.Generator
        Random generator.
    norm : float
        Operator norm of the result.

    Returns
    -------
    h : np.ndarray
        Hermitian matrix.
    """
    a = rng.standard_normal((rank, rank)) + 1j * rng.standard_normal((rank, rank))
    h = (a + dagger(a)) / 2
    scale = op_norm(h)

    return h * (norm / scale) if scale > 0 else h


def random_flat_bundle(
        base: Complex,
        rank: int,
        eps: float,
        depth: int = DEFAULT_SETTINGS.lattice_depth,
        rng: Optional[np.random.Generator] = None
) -> CocycleBundle:
    """
    Globally trivial bundle with transitions psi(rho, sigma) = phi_rho* phi_sigma built from random smooth charts
    phi_sigma(x) = exp(i (H_0 + sum_j x_j H_j)), the H_j small enough for every transition to be eps-Lipschitz.

    Parameters
    ----------
    base : Complex
        Base complex.
    rank : int
        Rank.
    eps : float
        Bound on the flatness.
    depth : int
        Lattice depth.
    rng : Optional[np.random.Generator]
        Random generator, seeded with 0 by default.

    Returns
    -------
    bundle : CocycleBundle
        Bundle with flatness at most eps.
    """
    if eps < 0:
        raise PreconditionError(f"Flatness bound must be non-negative, got {eps}.")
    rng = np.random.default_rng(0) if rng is None else rng
    size = eps / (2 * math.sqrt(2))

    charts = {}
    for sigma in base.simplices:
        offset = random_hermitian(rank, rng)
        slopes = np.stack([random_hermitian(rank, rng, size) for _ in sigma])
        weights = np.asarray(lattice_points(len(sigma) - 1, depth), dtype=float) / depth
        charts[sigma] = SampledUnitaryMap(
            sigma, depth, expi_hermitian(offset + np.einsum("pj,jab->pab", weights, slopes))
        )

    return bundle_from_charts(base, charts, depth=depth)


def circle_with_holonomy(
        u: np.ndarray,
        n: int = 6,
        depth: int = DEFAULT_SETTINGS.lattice_depth
) -> CocycleBundle:
    """
    Bundle over the n-vertex circle whose transport around the loop (0, 1, ..., n - 1, 0) is u, all edges but
    {0, n - 1} carrying the identity.

    Parameters
    ----------
    u : np.ndarray
        Unitary holonomy.
    n : int
        Number of vertices.
    depth : int
        Lattice depth.

    Returns
    -------
    bundle : CocycleBundle
        Circle bundle.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1] or unitarity_residual(u) > 1e-8:
        raise PreconditionError("The holonomy must be a unitary matrix.")

    return bundle_from_edge_transports(cycle_complex(n), u.shape[0], depth, {(0, n - 1): dagger(u)})

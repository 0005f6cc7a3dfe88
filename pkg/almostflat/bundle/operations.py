"""
    @file:              operations.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the operations producing new bundles from old ones: pullback along simplicial
                        maps, transfer to and from the barycentric subdivision, and direct sums.
"""

import logging
from typing import Dict

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..errors import MismatchError
from ..matrixcore import dagger
from ..sampled import SampledUnitaryMap
from ..simplicial import (
    BarycenterMap,
    Complex,
    Simplex,
    SimplicialMap,
    barycentric_subdivide,
    lattice_index,
    lattice_points
)
from .cocycle_bundle import CocycleBundle, Pair

logger = logging.getLogger(__name__)


def pullback(bundle: CocycleBundle, f: SimplicialMap) -> CocycleBundle:
    """
    Pullback along a simplicial map f: X -> Y, psi'(rho, sigma)(x) = psi(f(rho), f(sigma))(f(x)). Lattice points go to
    lattice points of the same depth, collapsed vertices adding their coordinates.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over Y.
    f : SimplicialMap
        Simplicial map with target Y.

    Returns
    -------
    pullback : CocycleBundle
        Bundle over X.
    """
    if f.target != bundle.base:
        raise MismatchError("The simplicial map does not land in the base of the bundle.")

    depth = bundle.depth
    transitions = {}
    for sigma in f.source.simplices:
        image_sigma = f.image(sigma)
        for rho in f.source.faces_in(sigma):
            image_rho = f.image(rho)
            index = lattice_index(len(image_rho) - 1, depth)
            positions = [index[f.push_coords(rho, p)] for p in lattice_points(len(rho) - 1, depth)]
            values = bundle.transitions[(image_rho, image_sigma)].values[positions]
            transitions[(rho, sigma)] = SampledUnitaryMap(rho, depth, values)

    return CocycleBundle(base=f.source, rank=bundle.rank, depth=depth, transitions=transitions)


def to_subdivision(bundle: CocycleBundle) -> CocycleBundle:
    """
    Transfer to the barycentric subdivision, psi'(rho', sigma')(y) = psi(top rho', top sigma')(barycenter map(y)), the
    top of a chain being its largest simplex. Images of lattice points off the base lattice are evaluated by
    interpolation and polar projection. An image x whose support phi is a proper face of top rho' gets
    psi(phi, top rho')(x)* psi(phi, top sigma')(x), the same value by the cocycle relation, so that every transition
    at x is read from the maps out of phi and the result is again a cocycle.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over X.

    Returns
    -------
    subdivided : CocycleBundle
        Bundle over S(X).
    """
    subdivision, barycenter_map = barycentric_subdivide(bundle.base)
    depth = bundle.depth
    transitions = {}
    for sigma in subdivision.simplices:
        top_sigma = max(sigma, key=len)
        for rho in subdivision.faces_in(sigma):
            top_rho = max(rho, key=len)
            values = []
            for p in lattice_points(len(rho) - 1, depth):
                _, weights = barycenter_map(rho, p)
                support = tuple(v for v, w in zip(top_rho, weights) if w > 0)
                if support == top_rho:
                    values.append(bundle.transitions[(top_rho, top_sigma)].evaluate(weights))
                    continue
                restricted = weights[weights > 0]
                into_rho = bundle.transitions[(support, top_rho)].evaluate(restricted)
                into_sigma = bundle.transitions[(support, top_sigma)].evaluate(restricted)
                values.append(dagger(into_rho) @ into_sigma)
            transitions[(rho, sigma)] = SampledUnitaryMap(rho, depth, values)

    logger.debug(f"Transferred a rank {bundle.rank} bundle to a subdivision with {len(subdivision)} simplices.")

    return CocycleBundle(base=subdivision, rank=bundle.rank, depth=depth, transitions=transitions)


def from_subdivision(
        bundle: CocycleBundle,
        base: Complex,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Transfer from the barycentric subdivision S(X) back to X. Each restriction to S(rho) is trivialized, the chart at
    the barycenter vertex rho is gauged to the identity, and psi(tau, rho)(x) = G_tau(y)* G_rho(y) with (kappa, y) the
    preimage of x under the barycenter map and G the charts on kappa.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over S(X).
    base : Complex
        The complex X.
    settings : Settings
        Thresholds used by the per-simplex trivializations.

    Returns
    -------
    bundle : CocycleBundle
        Bundle over X.
    """
    from ..trivialize import trivialize_contractible

    subdivision, _ = barycentric_subdivide(base)
    if subdivision != bundle.base:
        raise MismatchError("The bundle does not live on the barycentric subdivision of the given complex.")

    depth = bundle.depth
    local_charts: Dict[Simplex, Dict[Simplex, SampledUnitaryMap]] = {}
    for rho in base.simplices:
        star = subdivision.full_subcomplex(base.faces_in(rho))
        charts = trivialize_contractible(bundle.restrict(star), settings=settings).charts
        gauge = dagger(charts[(rho,)].values[0])
        local_charts[rho] = {
            kappa: SampledUnitaryMap(kappa, depth, chart.values @ gauge) for kappa, chart in charts.items()
        }

    transitions: Dict[Pair, SampledUnitaryMap] = {}
    for rho in base.simplices:
        for tau in base.faces_in(rho):
            values = []
            for p in lattice_points(len(tau) - 1, depth):
                chain, weights = BarycenterMap.inverse(tau, p)
                g_tau = local_charts[tau][chain].evaluate(weights)
                g_rho = local_charts[rho][chain].evaluate(weights)
                values.append(dagger(g_tau) @ g_rho)
            transitions[(tau, rho)] = SampledUnitaryMap(tau, depth, values)

    logger.debug(f"Transferred a rank {bundle.rank} bundle back from the subdivision of {len(base)} simplices.")

    return CocycleBundle(base=base, rank=bundle.rank, depth=depth, transitions=transitions)


def direct_sum(first: CocycleBundle, second: CocycleBundle) -> CocycleBundle:
    """
    Blockwise direct sum of two bundles over the same base.

    Parameters
    ----------
    first : CocycleBundle
        Upper-left block.
    second : CocycleBundle
        Lower-right block.

    Returns
    -------
    bundle : CocycleBundle
        Bundle of rank first.rank + second.rank.
    """
    if first.base != second.base:
        raise MismatchError("Direct sums need bundles over the same base.")
    if first.depth != second.depth:
        raise MismatchError(f"Direct sums need equal depths, got {first.depth} and {second.depth}.")

    transitions = {
        pair: SampledUnitaryMap(pair[0], first.depth, block_diagonal(first.transitions[pair].values, psi.values))
        for pair, psi in second.transitions.items()
    }

    return CocycleBundle(base=first.base, rank=first.rank + second.rank, depth=first.depth, transitions=transitions)


def block_diagonal(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    """
    Pointwise block-diagonal matrices of two stacks.

    Parameters
    ----------
    upper : np.ndarray
        Stack of shape (N, n, n).
    lower : np.ndarray
        Stack of shape (N, n', n').

    Returns
    -------
    stack : np.ndarray
        Stack of shape (N, n + n', n + n').
    """
    n, n_prime = upper.shape[-1], lower.shape[-1]
    stack = np.zeros(upper.shape[:-2] + (n + n_prime, n + n_prime), dtype=complex)
    stack[..., :n, :n] = upper
    stack[..., n:, n:] = lower

    return stack

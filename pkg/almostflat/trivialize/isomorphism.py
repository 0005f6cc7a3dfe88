"""
    @file:              isomorphism.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the construction of an isomorphism between two bundles over the same base
                        whose edge transports agree once both are written in tree-transported vertex charts.
"""

import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np
from scipy import linalg

from ..bundle import BundleIso, CocycleBundle
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import MismatchError, ThresholdError
from ..matrixcore import dagger, op_norm
from ..sampled import SampledUnitaryMap
from ..simplicial import Simplex, Vertex, maximal_tree, optional_basepoint
from ..transport import edge_transport
from .chart_extension import BoundaryRule, extend_family, vertex_charts

logger = logging.getLogger(__name__)


def _isomorphism_rule(source: CocycleBundle, target: CocycleBundle) -> BoundaryRule:
    def rule(conjugators, face: Simplex, simplex: Simplex, positions: List[int]) -> np.ndarray:
        on_face = conjugators[face].values[positions]
        psi = source.transitions[(face, simplex)].values[positions]
        psi_prime = target.transitions[(face, simplex)].values[positions]
        return dagger(psi_prime) @ on_face @ psi

    return rule


def _basepoint_conjugator(
        transports: Sequence[np.ndarray],
        transports_prime: Sequence[np.ndarray],
        settings: Settings
) -> np.ndarray:
    """
    Unitary X with X A ~ A' X for every pair (A, A') of tree-normalized transports. X spans the least singular
    subspace of X -> (A' X - X A), the identity being projected on it first so that equal bundles get the identity.
    """
    rank = transports[0].shape[-1]
    identity = np.eye(rank)
    blocks = [np.kron(a_prime, identity) - np.kron(identity, a.T) for a, a_prime in zip(transports, transports_prime)]
    _, singular_values, vh = linalg.svd(np.concatenate(blocks), full_matrices=False)
    kept = vh[singular_values <= singular_values[-1] + settings.audit_tol]

    coefficients = kept @ identity.reshape(-1)
    if np.linalg.norm(coefficients) > settings.tol:
        x = (dagger(kept) @ coefficients).reshape(rank, rank)
    else:
        x = kept[-1].conj().reshape(rank, rank)

    return linalg.polar(x)[0]


def iso_between(
        source: CocycleBundle,
        target: CocycleBundle,
        eps: Optional[float] = None,
        tree: Optional[Iterable[Simplex]] = None,
        basepoint: Optional[Vertex] = None,
        settings: Settings = DEFAULT_SETTINGS
) -> BundleIso:
    """
    Isomorphism between two bundles over the same base whose chart-normalized edge transports differ by less than eps.
    With G_v and G'_v the tree-transported vertex charts of the two bundles, the vertex conjugators are
    Xi_v = G'_v X G_v*. The constant unitary X aligns the vertex charts and the tree-normalized edge transports
    G_b* T_ab G_a of the two bundles, so a constant change of gauge is recovered exactly. Every edge must
    satisfy ||Xi_b T_ab Xi_a* - T'_ab|| < eps. The conjugators are then extended skeleton by skeleton with boundary
    values f_rho = psi'(tau, rho)* f_tau psi(tau, rho) on each face tau.

    Parameters
    ----------
    source : CocycleBundle
        First bundle.
    target : CocycleBundle
        Second bundle, over the same base with the same rank and depth.
    eps : Optional[float]
        Largest accepted edge transport difference. Defaults to the flatness threshold of the settings.
    tree : Optional[Iterable[Simplex]]
        Maximal tree carrying the vertex charts. Defaults to the breadth-first tree of the base.
    basepoint : Optional[Vertex]
        Basepoint of the vertex charts. Defaults to the least vertex.
    settings : Settings
        Thresholds.

    Returns
    -------
    iso : BundleIso
        Conjugators from the source to the target.
    """
    if source.base != target.base:
        raise MismatchError("An isomorphism relates bundles over the same base.")
    if source.rank != target.rank or source.depth != target.depth:
        raise MismatchError(
            f"Rank and depth differ: ({source.rank}, {source.depth}) against ({target.rank}, {target.depth})."
        )
    eps = settings.flatness_threshold if eps is None else eps
    base = source.base
    tree = maximal_tree(base) if tree is None else frozenset(tuple(sorted(e)) for e in tree)
    basepoint = optional_basepoint(base, basepoint)

    g = {v: chart.values[0] for (v,), chart in vertex_charts(source, tree, basepoint).items()}
    g_prime = {v: chart.values[0] for (v,), chart in vertex_charts(target, tree, basepoint).items()}
    holonomies = {(a, b): dagger(g[b]) @ edge_transport(source, a, b) @ g[a] for a, b in base.edges}
    holonomies_prime = {(a, b): dagger(g_prime[b]) @ edge_transport(target, a, b) @ g_prime[a] for a, b in base.edges}
    x = _basepoint_conjugator(
        [g[v] for v in g] + [holonomies[e] for e in holonomies],
        [g_prime[v] for v in g] + [holonomies_prime[e] for e in holonomies],
        settings
    )
    vertices = {(v,): SampledUnitaryMap((v,), source.depth, (g_prime[v] @ x @ dagger(g[v]))[None]) for v in g}

    for a, b in base.edges:
        normalized = vertices[(b,)].values[0] @ edge_transport(source, a, b) @ dagger(vertices[(a,)].values[0])
        difference = op_norm(normalized - edge_transport(target, a, b))
        if difference >= eps:
            raise ThresholdError(
                f"Chart-normalized edge transports across {(a, b)} differ by {difference:.6g}, not below {eps:.6g}.",
                where=(a, b),
                value=difference
            )

    simplices = [s for s in base.simplices if len(s) > 1]
    conjugators = extend_family(simplices, source.depth, vertices, _isomorphism_rule(source, target), settings=settings)

    iso = BundleIso(source=source, target=target, conjugators=conjugators)
    logger.debug(f"Built an isomorphism over {len(simplices)} simplices with residual {iso.residual():.3g}.")

    return iso

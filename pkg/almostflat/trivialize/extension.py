"""
    @file:              extension.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the extension of bundles from a skeleton to the next one and from a
                        subcomplex to a larger complex. A new simplex rho receives the transitions psi(tau, rho) = G_tau
                        read from a global trivialization of the bundle over its boundary.
"""

import logging
import math
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from ..bundle import CocycleBundle, Pair, flatness_audit
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import ComplexError, MismatchError, ThresholdError
from ..sampled import ExtensionMethod, SampledUnitaryMap, identity_map
from ..simplicial import (
    Complex,
    ContractionWitness,
    Simplex,
    SimplicialPath,
    Vertex,
    apply_witness,
    build_complex,
    proper_faces,
    skeleton
)
from ..transport import loop_defect
from .chart_extension import extend_family, global_charts, trivialization_rule
from .trivializer import trivialize_contractible

logger = logging.getLogger(__name__)

NewEdgeWitness = Tuple[SimplicialPath, ContractionWitness]


def face_defect_threshold(settings: Settings = DEFAULT_SETTINGS) -> float:
    """
    Largest boundary defect accepted over a 2-simplex, 2 sin((pi - flux_margin)/2). A unitary holonomy within it has
    every eigenphase at distance at least flux_margin from pi.

    Parameters
    ----------
    settings : Settings
        Settings.

    Returns
    -------
    threshold : float
        Defect threshold.
    """
    return 2 * math.sin((math.pi - settings.flux_margin) / 2)


def _charts_to_transitions(rho: Simplex, charts: Mapping[Simplex, SampledUnitaryMap], depth: int, rank: int) -> dict:
    transitions = {(tau, rho): charts[tau] for tau in proper_faces(rho)}
    transitions[(rho, rho)] = identity_map(rho, depth, rank)

    return transitions


def _extend_over_triangle(bundle: CocycleBundle, rho: Simplex, settings: Settings) -> dict:
    boundary = bundle.base.subcomplex(proper_faces(rho))
    restricted = bundle.restrict(boundary)
    defect = loop_defect(restricted, SimplicialPath(rho + rho[:1]))
    if defect > face_defect_threshold(settings):
        raise ThresholdError(
            f"Boundary transport of {rho} has defect {defect:.6g}, above {face_defect_threshold(settings):.6g}.",
            where=rho,
            value=defect
        )

    tree = [(rho[0], rho[1]), (rho[0], rho[2])]
    charts = global_charts(
        restricted, tree, rho[0], methods=(ExtensionMethod.SERIES, ExtensionMethod.EXPONENTIAL), settings=settings
    )

    return _charts_to_transitions(rho, charts, bundle.depth, bundle.rank)


def _extend_over_simplex(bundle: CocycleBundle, rho: Simplex, settings: Settings) -> dict:
    facets = [rho[:i] + rho[i + 1:] for i in range(len(rho))]
    last = max(facets)
    disk = bundle.base.subcomplex([f for f in facets if f != last])
    charts = dict(trivialize_contractible(bundle.restrict(disk), settings=settings).charts)

    boundary = bundle.restrict(bundle.base.subcomplex(facets))
    charts = extend_family([last], bundle.depth, charts, trivialization_rule(boundary), settings=settings)

    return _charts_to_transitions(rho, charts, bundle.depth, bundle.rank)


def _assemble(base: Complex, bundle: CocycleBundle, extra: Dict[Pair, SampledUnitaryMap]) -> CocycleBundle:
    transitions = dict(bundle.transitions)
    transitions.update(extra)
    return CocycleBundle(base=base, rank=bundle.rank, depth=bundle.depth, transitions=transitions)


def extend_skeleton_1to2(
        bundle: CocycleBundle,
        complex_: Complex,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Extension of a bundle over the 1-skeleton to the 2-skeleton. Each 2-simplex {a, b, c} gets the charts of the global
    trivialization of its boundary triangle with tree {ab, ac}; the edge bc carries the boundary defect. Boundaries too
    far apart for the series extension fall back to the exponential chart.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over the 1-skeleton of complex_.
    complex_ : Complex
        Complex.
    settings : Settings
        Thresholds.

    Returns
    -------
    extension : CocycleBundle
        Bundle over the 2-skeleton restricting to the input.
    """
    if bundle.base != skeleton(complex_, 1):
        raise MismatchError("The bundle does not live on the 1-skeleton of the complex.")

    extra = {}
    for rho in complex_.simplices_of_dimension(2):
        extra.update(_extend_over_triangle(bundle, rho, settings))

    extension = _assemble(skeleton(complex_, 2), bundle, extra)
    logger.debug(f"Extended over {len(complex_.simplices_of_dimension(2))} 2-simplices, "
                 f"flatness {flatness_audit(extension).epsilon:.3g}.")

    return extension


def extend_skeleton(
        bundle: CocycleBundle,
        complex_: Complex,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Extension of a bundle over the k-skeleton to the (k + 1)-skeleton. For k = 0 the new transitions are identities;
    k = 1 is handled by extend_skeleton_1to2; for k >= 2 each (k + 1)-simplex receives the charts of a global
    trivialization of its boundary sphere, built over the boundary minus its last facet and extended over that facet.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over the k-skeleton of complex_.
    complex_ : Complex
        Complex.
    settings : Settings
        Thresholds.

    Returns
    -------
    extension : CocycleBundle
        Bundle over the (k + 1)-skeleton restricting to the input.
    """
    k = bundle.base.dimension
    if bundle.base != skeleton(complex_, k):
        raise MismatchError(f"The bundle does not live on the {k}-skeleton of the complex.")
    if k == 1:
        return extend_skeleton_1to2(bundle, complex_, settings=settings)

    audit = flatness_audit(bundle).epsilon
    if audit > settings.flatness_threshold:
        raise ThresholdError(
            f"Flatness {audit:.6g} exceeds the extension threshold {settings.flatness_threshold:.6g}.",
            value=audit
        )

    extra = {}
    for rho in complex_.simplices_of_dimension(k + 1):
        if k == 0:
            extra.update(_charts_to_transitions(
                rho, {(v,): identity_map((v,), bundle.depth, bundle.rank) for v in rho}, bundle.depth, bundle.rank
            ))
        else:
            extra.update(_extend_over_simplex(bundle, rho, settings))

    return _assemble(skeleton(complex_, k + 1), bundle, extra)


def _edge_transport(transitions: Mapping[Pair, SampledUnitaryMap], a: Vertex, b: Vertex) -> np.ndarray:
    edge = tuple(sorted((a, b)))
    return transitions[((b,), edge)].values[0] @ transitions[((a,), edge)].values[0].conj().T


def extend_subcomplex(
        bundle: CocycleBundle,
        target: Complex,
        witnesses: Optional[Mapping[Simplex, NewEdgeWitness]] = None,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Extension of a bundle over a subcomplex X to a complex X' containing it. New vertices get identity transitions.
    A new edge {p, q} between vertices already present needs a path from p to q through edges already present and a
    witness contracting that path followed by (q, p) in X'; the transport across the edge is set equal to the path
    transport. A new edge at a new vertex gets identity transitions. New 2-simplices and higher simplices are handled
    as in the skeleton extensions.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a subcomplex of target.
    target : Complex
        Larger complex.
    witnesses : Optional[Mapping[Simplex, NewEdgeWitness]]
        Path and contraction witness per new edge, keyed by the sorted edge.
    settings : Settings
        Thresholds.

    Returns
    -------
    extension : CocycleBundle
        Bundle over target restricting to the input.
    """
    witnesses = {tuple(sorted(e)): w for e, w in (witnesses or {}).items()}
    for s in bundle.base.simplices:
        if s not in target.simplex_set:
            raise ComplexError(f"{s} is not a simplex of the larger complex.")

    rank, depth = bundle.rank, bundle.depth
    transitions = dict(bundle.transitions)
    present = set(bundle.base.simplices)
    old_vertices = set(bundle.base.vertices)

    for v in target.vertices:
        if (v,) not in present:
            transitions[((v,), (v,))] = identity_map((v,), depth, rank)
            present.add((v,))

    for p, q in target.edges:
        if (p, q) in present:
            continue
        edge = (p, q)
        transitions[(edge, edge)] = identity_map(edge, depth, rank)
        transitions[((p,), edge)] = identity_map((p,), depth, rank)
        if edge in witnesses:
            path, witness = witnesses[edge]
            if path.start != p or path.end != q:
                raise ComplexError(f"The path given for {edge} does not run from {p} to {q}.")
            for a, b in path.steps():
                if tuple(sorted((a, b))) not in present:
                    raise ComplexError(f"The path given for {edge} uses ({a}, {b}), which is not present yet.")
            replay = apply_witness(path.concat(SimplicialPath((q, p))), witness, target)
            if not replay.valid:
                raise ComplexError(f"The witness given for {edge} does not contract its loop.")
            transport = np.eye(rank, dtype=complex)
            for a, b in path.steps():
                transport = _edge_transport(transitions, a, b) @ transport
            transitions[((q,), edge)] = SampledUnitaryMap((q,), depth, transport[None])
        elif p in old_vertices and q in old_vertices:
            raise ComplexError(f"Missing witness for the new edge {edge}.")
        else:
            transitions[((q,), edge)] = identity_map((q,), depth, rank)
        present.add(edge)

    for dimension in range(2, target.dimension + 1):
        current = CocycleBundle(build_complex(present), rank, depth, {
            key: value for key, value in transitions.items() if key[1] in present
        })
        for rho in target.simplices_of_dimension(dimension):
            if rho in present:
                continue
            if dimension == 2:
                transitions.update(_extend_over_triangle(current, rho, settings))
            else:
                transitions.update(_extend_over_simplex(current, rho, settings))
        present.update(target.simplices_of_dimension(dimension))

    extension = CocycleBundle(base=target, rank=rank, depth=depth, transitions=transitions)
    logger.info(f"Extended a bundle over {len(bundle.base)} simplices to {len(target)} simplices, "
                f"flatness {flatness_audit(extension).epsilon:.3g}.")

    return extension

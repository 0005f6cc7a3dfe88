"""
    @file:              conversion.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the conversion of almost flat bundles into almost representations of the
                        edge-path presentation, by transport along generator loops, and back, by prescribing the
                        transports across the edges outside a maximal tree and extending over the 2-skeleton.
"""

import logging
from typing import Iterable, List, Optional

from ..bundle import CocycleBundle, bundle_from_edge_transports, flatness_audit
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import ComplexError, MismatchError
from ..simplicial import Complex, Presentation, Simplex, bfs_contraction_witness, skeleton
from ..transport import WitnessedBoundReport, path_transport, verify_witnessed_bound
from ..trivialize import extend_skeleton, extend_skeleton_1to2
from .almost_rep import AlmostRep, defect

logger = logging.getLogger(__name__)


def bundle_to_rep(bundle: CocycleBundle, presentation: Presentation) -> AlmostRep:
    """
    Almost representation sending each generator to the transport of the bundle along its loop.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a connected complex.
    presentation : Presentation
        Presentation carrying generator loops in the base of the bundle.

    Returns
    -------
    phi : AlmostRep
        Almost representation of the presentation.
    """
    if not presentation.generator_loops and presentation.generators:
        raise ComplexError("The presentation carries no generator loops.")

    images = {}
    for label, loop in presentation.loops_by_label.items():
        images[label] = path_transport(bundle, loop).matrix
    phi = AlmostRep(presentation=presentation, images=images)
    logger.debug(f"Bundle of flatness {flatness_audit(bundle).epsilon:.3g} gives an almost representation of "
                 f"defect {defect(phi):.3g}.")

    return phi


def relation_reports(
        bundle: CocycleBundle,
        presentation: Presentation,
        max_states: int = 50000
) -> List[WitnessedBoundReport]:
    """
    Witnessed bounds on the relation loops of a presentation: each relation is expanded into a based loop, a
    contraction witness is searched for it and its defect compared with c(n) times the flatness of the bundle.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    presentation : Presentation
        Presentation with generator loops in the base of the bundle.
    max_states : int
        Search budget per relation.

    Returns
    -------
    reports : List[WitnessedBoundReport]
        One report per relation.
    """
    audit = flatness_audit(bundle).epsilon
    reports = []
    for relation in presentation.relations:
        loop = presentation.expand_word(relation)
        witness = bfs_contraction_witness(loop, bundle.base, max_states=max_states)
        reports.append(verify_witnessed_bound(bundle, loop, witness, audit=audit))

    return reports


def rep_to_bundle(
        phi: AlmostRep,
        complex_: Complex,
        tree: Optional[Iterable[Simplex]] = None,
        presentation: Optional[Presentation] = None,
        depth: int = DEFAULT_SETTINGS.lattice_depth,
        settings: Settings = DEFAULT_SETTINGS
) -> CocycleBundle:
    """
    Bundle over a complex whose transport across the edge of each generator is the image of that generator, trivial
    across the tree edges, extended over the higher skeleta.

    Parameters
    ----------
    phi : AlmostRep
        Almost representation of an edge-path presentation of the complex.
    complex_ : Complex
        Connected complex.
    tree : Optional[Iterable[Simplex]]
        Maximal tree the presentation was built from; only used to check the generator edges.
    presentation : Optional[Presentation]
        Presentation with generator edges, the one of phi by default.
    depth : int
        Lattice depth of the bundle.
    settings : Settings
        Thresholds of the skeleton extensions.

    Returns
    -------
    bundle : CocycleBundle
        Bundle over complex_.
    """
    presentation = phi.presentation if presentation is None else presentation
    if presentation.generators != phi.generators:
        raise MismatchError("The almost representation is not one of the given presentation.")
    if len(presentation.generator_edges) != len(presentation.generators):
        raise ComplexError("The presentation does not record the edge of each generator.")
    if tree is not None:
        tree = {tuple(sorted(e)) for e in tree}
        crossing = [e for e in presentation.generator_edges if tuple(sorted(e)) in tree]
        if crossing:
            raise ComplexError(f"Generator edges {crossing} lie in the tree.")

    transports = {tuple(edge): phi.images[label] for label, edge in zip(presentation.generators,
                                                                        presentation.generator_edges)}
    bundle = bundle_from_edge_transports(skeleton(complex_, 1), phi.rank, depth, transports)
    if complex_.dimension >= 2:
        bundle = extend_skeleton_1to2(bundle, complex_, settings=settings)
    while bundle.base.dimension < complex_.dimension:
        bundle = extend_skeleton(bundle, complex_, settings=settings)

    logger.info(f"Almost representation of defect {defect(phi):.3g} gives a bundle of flatness "
                f"{flatness_audit(bundle).epsilon:.3g}.")

    return bundle

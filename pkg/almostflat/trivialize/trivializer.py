"""
    @file:              trivializer.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the construction of global trivializations of flat enough bundles, from loop
                        certificates on the edges outside a maximal tree or, over contractible complexes, from
                        automatically searched contraction witnesses.
"""

import logging
from typing import FrozenSet, Iterable, List, Optional

from attrs import field, frozen

from ..bundle import CocycleBundle, GlobalTrivialization, flatness_audit
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import ComplexError, PreconditionError, ThresholdError
from ..simplicial import (
    ContractionWitness,
    Simplex,
    SimplicialPath,
    TreeLoopGenerator,
    bfs_contraction_witness,
    maximal_tree
)
from ..transport import loop_defect, verify_witnessed_bound
from .chart_extension import global_charts

logger = logging.getLogger(__name__)


@frozen
class LoopCertificate:
    """
    Certificate for an edge {x, y} outside the tree: the loop (x, y) * (tree path from y to x), its measured defect and
    the bound the defect was checked against.
    """
    edge: Simplex = field(converter=tuple)
    loop: SimplicialPath
    defect: float
    bound: float
    complexity: Optional[int] = field(default=None)
    witness: Optional[ContractionWitness] = field(default=None, eq=False, repr=False)


def _check_certificate_shape(certificate: LoopCertificate, tree: FrozenSet[Simplex]) -> None:
    steps = certificate.loop.reduced().steps()
    if not certificate.loop.is_closed or not steps or tuple(sorted(steps[0])) != certificate.edge:
        raise ComplexError(f"Certificate loop {certificate.loop.vertices} does not start across {certificate.edge}.")
    for a, b in steps[1:]:
        if tuple(sorted((a, b))) not in tree:
            raise ComplexError(f"Certificate loop {certificate.loop.vertices} leaves the tree at ({a}, {b}).")


def trivialize(
        bundle: CocycleBundle,
        tree: Iterable[Simplex],
        certificates: Iterable[LoopCertificate],
        settings: Settings = DEFAULT_SETTINGS
) -> GlobalTrivialization:
    """
    Global trivialization of a flat enough bundle. Vertex charts are transported along the tree from the least vertex,
    which makes tree edges constant; every other simplex is reached by the unitary extension, in dimension-major order.
    Over an edge outside the tree the boundary diameter equals the defect of its certified loop.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a connected complex.
    tree : Iterable[Simplex]
        Maximal tree.
    certificates : Iterable[LoopCertificate]
        One certificate per edge outside the tree.
    settings : Settings
        Flatness threshold, extension diameter and tolerances.

    Returns
    -------
    trivialization : GlobalTrivialization
        Charts over every simplex.
    """
    tree = frozenset(tuple(sorted(e)) for e in tree)
    audit = flatness_audit(bundle).epsilon
    if audit > settings.flatness_threshold:
        raise ThresholdError(
            f"Flatness {audit:.6g} exceeds the trivialization threshold {settings.flatness_threshold:.6g}.",
            value=audit
        )

    by_edge = {c.edge: c for c in certificates}
    for edge in bundle.base.edges:
        if edge in tree:
            continue
        certificate = by_edge.get(edge)
        if certificate is None:
            raise ComplexError(f"Missing loop certificate for the edge {edge}.")
        _check_certificate_shape(certificate, tree)
        defect = loop_defect(bundle, certificate.loop)
        if defect > certificate.bound + settings.tol:
            raise ThresholdError(
                f"Loop across {edge} has defect {defect:.6g} above its certified bound {certificate.bound:.6g}.",
                where=edge,
                value=defect
            )
        if defect > settings.extension_diameter:
            raise ThresholdError(
                f"Loop across {edge} has defect {defect:.6g} above {settings.extension_diameter}.",
                where=edge,
                value=defect
            )

    charts = global_charts(bundle, tree, bundle.base.vertices[0], settings=settings)
    trivialization = GlobalTrivialization(bundle=bundle, charts=charts)
    if audit > 0:
        chart_audit = trivialization.audit()
        logger.info(f"Chart flatness {chart_audit:.3g} is {chart_audit / audit:.3g} times the bundle flatness.")

    return trivialization


def certify_tree_loops(
        bundle: CocycleBundle,
        tree: Optional[Iterable[Simplex]] = None,
        audit: Optional[float] = None,
        verbose: bool = False
) -> List[LoopCertificate]:
    """
    Certificates for the loops across the edges outside a tree, each backed by a searched contraction witness and
    the witnessed transport bound.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a contractible complex.
    tree : Optional[Iterable[Simplex]]
        Maximal tree, the breadth-first tree by default.
    audit : Optional[float]
        Flatness of the bundle, measured when omitted.
    verbose : bool
        True to log progress at INFO level. (default = False)

    Returns
    -------
    certificates : List[LoopCertificate]
        One certificate per edge outside the tree.
    """
    audit = flatness_audit(bundle).epsilon if audit is None else audit
    loops = TreeLoopGenerator(bundle.base, tree=tree, verbose=verbose)

    certificates = []
    for edge, loop in loops:
        witness = bfs_contraction_witness(loop, bundle.base)
        report = verify_witnessed_bound(bundle, loop, witness, audit=audit)
        if not report.passed:
            raise ThresholdError(
                f"Loop across {edge} has defect {report.defect:.6g} above the witnessed bound {report.bound:.6g}.",
                where=edge,
                value=report.defect
            )
        certificates.append(
            LoopCertificate(edge, loop, report.defect, report.bound, complexity=report.complexity, witness=witness)
        )

    return certificates


def trivialize_contractible(
        bundle: CocycleBundle,
        settings: Settings = DEFAULT_SETTINGS,
        verbose: bool = False
) -> GlobalTrivialization:
    """
    Global trivialization of a flat enough bundle over a finite contractible complex, with loop certificates derived
    from searched contraction witnesses.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a contractible complex.
    settings : Settings
        Thresholds.
    verbose : bool
        True to log progress at INFO level. (default = False)

    Returns
    -------
    trivialization : GlobalTrivialization
        Charts over every simplex.
    """
    if not bundle.base.is_connected():
        raise PreconditionError("A contractible complex is connected.")

    tree = maximal_tree(bundle.base)
    certificates = certify_tree_loops(bundle, tree=tree, verbose=verbose)

    return trivialize(bundle, tree, certificates, settings=settings)

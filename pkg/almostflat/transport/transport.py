"""
    @file:              transport.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains simplicial parallel transport in vertex charts, loop defects and the check of
                        witnessed transport bounds.
"""

import logging
import math
from typing import NamedTuple, Optional, Tuple

from attrs import frozen
import numpy as np

from ..bundle import CocycleBundle, flatness_audit
from ..errors import ComplexError, ThresholdError
from ..matrixcore import dagger, distance_to_identity
from ..simplicial import ContractionWitness, SimplicialPath, Vertex, apply_witness
from .bounds import HcConstants, hc_constants

logger = logging.getLogger(__name__)


@frozen(eq=False)
class TransportResult:
    """
    Transport along a path, from the chart of its first vertex to the chart of its last vertex.
    """
    matrix: np.ndarray
    path: SimplicialPath


class WitnessedBoundReport(NamedTuple):
    loop: Tuple[Vertex, ...]
    complexity: int
    audit: float
    defect: float
    bound: float
    passed: bool

    def to_dict(self) -> dict:
        """
        JSON-ready form of the report.

        Returns
        -------
        report : dict
            Loop, complexity, defect, bound and pass flag.
        """
        return {
            "loop": list(self.loop),
            "complexity": self.complexity,
            "audit": self.audit,
            "defect": self.defect,
            "bound": self.bound,
            "pass": self.passed
        }


def edge_transport(bundle: CocycleBundle, a: Vertex, b: Vertex) -> np.ndarray:
    """
    Transport from the chart of a to the chart of b across the edge {a, b}, psi({b}, e)(b) psi({a}, e)(a)*.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    a : Vertex
        Start vertex.
    b : Vertex
        End vertex.

    Returns
    -------
    transport : np.ndarray
        Unitary matrix.
    """
    if a == b:
        return np.eye(bundle.rank, dtype=complex)

    edge = tuple(sorted((a, b)))
    if edge not in bundle.base.simplex_set:
        raise ComplexError(f"({a}, {b}) is not an edge of the base.")

    return bundle.transitions[((b,), edge)].values[0] @ dagger(bundle.transitions[((a,), edge)].values[0])


def path_transport(bundle: CocycleBundle, path: SimplicialPath) -> TransportResult:
    """
    Ordered product T_(v_{k-1}, v_k) ... T_(v_0, v_1) of edge transports.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    path : SimplicialPath
        Path in the base.

    Returns
    -------
    result : TransportResult
        Transport and path.
    """
    path.validate(bundle.base)
    matrix = np.eye(bundle.rank, dtype=complex)
    for a, b in path.steps():
        matrix = edge_transport(bundle, a, b) @ matrix

    return TransportResult(matrix=matrix, path=path)


def loop_defect(bundle: CocycleBundle, loop: SimplicialPath) -> float:
    """
    The defect ||T_loop - id||.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    loop : SimplicialPath
        Closed path.

    Returns
    -------
    defect : float
        Operator norm distance of the loop transport to the identity.
    """
    if not loop.is_closed:
        raise ComplexError(f"Path {loop.vertices} is not closed.")

    return distance_to_identity(path_transport(bundle, loop).matrix)


def verify_witnessed_bound(
        bundle: CocycleBundle,
        loop: SimplicialPath,
        witness: ContractionWitness,
        audit: Optional[float] = None,
        tol: float = 1e-9
) -> WitnessedBoundReport:
    """
    Compares the defect of a witnessed loop with c(n) times the flatness of the bundle, n the witness complexity.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    loop : SimplicialPath
        Closed path.
    witness : ContractionWitness
        Witness contracting the loop.
    audit : Optional[float]
        Flatness of the bundle, measured when omitted.
    tol : float
        Slack on the comparison.

    Returns
    -------
    report : WitnessedBoundReport
        Both sides of the bound.
    """
    replay = apply_witness(loop, witness, bundle.base)
    if not replay.valid:
        raise ComplexError(f"Witness does not contract {loop.vertices}; it ends on {replay.final_loop}.")

    audit = flatness_audit(bundle).epsilon if audit is None else audit
    if replay.complexity == 0:
        # backtracks only, the transport is exactly the identity
        constants = HcConstants(c=0.0, delta=math.inf)
    else:
        constants = hc_constants(replay.complexity)
    if audit > constants.delta:
        raise ThresholdError(
            f"Flatness {audit:.6g} exceeds delta({replay.complexity}) = {constants.delta:.6g} "
            f"for loop {loop.vertices}.",
            where=loop.vertices,
            value=audit
        )

    defect = loop_defect(bundle, loop)
    bound = constants.c * audit
    logger.debug(f"Loop {loop.vertices}: defect {defect:.3g}, bound {bound:.3g} at complexity {replay.complexity}.")

    return WitnessedBoundReport(
        loop=loop.vertices,
        complexity=replay.complexity,
        audit=audit,
        defect=defect,
        bound=bound,
        passed=defect <= bound + tol
    )

"""
    @file:              cocycle_bundle.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the CocycleBundle class, a bundle over a simplicial complex given by its
                        sampled transition functions, together with its flatness audit and cocycle check.
"""

import logging
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from attrs import field, frozen
import numpy as np

from ..config import DEFAULT_SETTINGS
from ..errors import ComplexError, MismatchError
from ..matrixcore import dagger, op_norms
from ..sampled import SampledUnitaryMap, identity_map
from ..simplicial import Complex, Simplex, face_indices, lattice_points, proper_faces

logger = logging.getLogger(__name__)

Pair = Tuple[Simplex, Simplex]


class AuditReport(NamedTuple):
    """
    Flatness audit: epsilon is the largest Lipschitz estimate over all transition functions.
    """
    epsilon: float
    per_pair: Dict[Pair, float]
    worst: Optional[Pair]


class CocycleViolation(NamedTuple):
    tau: Simplex
    rho: Simplex
    sigma: Simplex
    point: Tuple[int, ...]
    residual: float


class CocycleReport(NamedTuple):
    passed: bool
    violation: Optional[CocycleViolation]
    max_residual: float


def _as_transitions(transitions: Mapping) -> Dict[Pair, SampledUnitaryMap]:
    return {(tuple(rho), tuple(sigma)): value for (rho, sigma), value in transitions.items()}


@frozen(eq=False)
class CocycleBundle:
    """
    Transition data of a bundle over a complex: a sampled unitary map on |rho| for every pair of simplices rho <= sigma,
    all of the same rank and depth. Vertex-to-simplex transitions play the role of basepoint charts.
    """
    base: Complex
    rank: int
    depth: int
    transitions: Dict[Pair, SampledUnitaryMap] = field(converter=_as_transitions)

    def __attrs_post_init__(self):
        for sigma in self.base.simplices:
            for rho in self.base.faces_in(sigma):
                psi = self.transitions.get((rho, sigma))
                if psi is None:
                    raise ComplexError(f"Missing transition for {rho} in {sigma}.")
                if psi.simplex != rho or psi.depth != self.depth or psi.rank != self.rank or psi.boundary_only:
                    raise MismatchError(f"Transition for {rho} in {sigma} does not match the bundle's rank and depth.")
        expected = sum(2 ** len(s) - 1 for s in self.base.simplices)
        if len(self.transitions) != expected:
            raise ComplexError(f"Expected {expected} transitions, got {len(self.transitions)}.")

    def transition(self, rho: Simplex, sigma: Simplex) -> SampledUnitaryMap:
        """
        The transition function of rho in sigma.

        Parameters
        ----------
        rho : Simplex
            Face of sigma.
        sigma : Simplex
            Simplex of the base.

        Returns
        -------
        psi : SampledUnitaryMap
            Map on |rho|.
        """
        key = (tuple(sorted(rho)), tuple(sorted(sigma)))
        if key not in self.transitions:
            raise ComplexError(f"No transition for {key[0]} in {key[1]}.")

        return self.transitions[key]

    def pairs(self) -> List[Pair]:
        """
        All pairs rho <= sigma, sigma in simplex order then rho in face order.

        Returns
        -------
        pairs : List[Pair]
            Pairs.
        """
        return [(rho, sigma) for sigma in self.base.simplices for rho in self.base.faces_in(sigma)]

    def restrict(self, subcomplex: Complex) -> "CocycleBundle":
        """
        Restriction to a subcomplex.

        Parameters
        ----------
        subcomplex : Complex
            Subcomplex of the base.

        Returns
        -------
        restriction : CocycleBundle
            Bundle over the subcomplex sharing the transition values.
        """
        for s in subcomplex.simplices:
            self.base.require(s)

        return CocycleBundle(
            base=subcomplex,
            rank=self.rank,
            depth=self.depth,
            transitions={
                (rho, sigma): self.transitions[(rho, sigma)]
                for sigma in subcomplex.simplices for rho in subcomplex.faces_in(sigma)
            }
        )

    def audit(self) -> AuditReport:
        """
        Flatness audit, see flatness_audit.

        Returns
        -------
        report : AuditReport
            Audit.
        """
        return flatness_audit(self)


def flatness_audit(bundle: CocycleBundle) -> AuditReport:
    """
    Largest Lipschitz estimate over all transition functions. Transitions on vertices are single points and are skipped.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.

    Returns
    -------
    report : AuditReport
        Epsilon, per-pair estimates and the worst pair.
    """
    per_pair = {}
    for rho, sigma in bundle.pairs():
        if len(rho) > 1:
            per_pair[(rho, sigma)] = bundle.transitions[(rho, sigma)].lipschitz_estimate()

    if not per_pair:
        return AuditReport(epsilon=0.0, per_pair=per_pair, worst=None)

    worst = max(per_pair, key=per_pair.get)
    return AuditReport(epsilon=per_pair[worst], per_pair=per_pair, worst=worst)


def cocycle_check(bundle: CocycleBundle, tol: Optional[float] = None) -> CocycleReport:
    """
    Checks psi(rho, rho) = id and psi(tau, sigma) = psi(tau, rho) psi(rho, sigma) on |tau| at every lattice point.
    Failures are reported, not raised; the first violation follows simplex order of sigma, rho, then tau.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.
    tol : Optional[float]
        Tolerance, DEFAULT_SETTINGS.audit_tol by default.

    Returns
    -------
    report : CocycleReport
        Pass flag, first violation and largest residual.
    """
    tol = DEFAULT_SETTINGS.audit_tol if tol is None else tol
    identity = np.eye(bundle.rank)
    violation = None
    max_residual = 0.0

    def record(tau, rho, sigma, residuals):
        nonlocal violation, max_residual
        if residuals.size == 0:
            return
        worst = int(np.argmax(residuals))
        max_residual = max(max_residual, float(residuals[worst]))
        if violation is None and residuals[worst] > tol:
            first = int(np.argmax(residuals > tol))
            point = lattice_points(len(tau) - 1, bundle.depth)[first]
            violation = CocycleViolation(tau, rho, sigma, point, float(residuals[first]))

    for sigma in bundle.base.simplices:
        record(sigma, sigma, sigma, op_norms(bundle.transitions[(sigma, sigma)].values - identity))
        for rho in proper_faces(sigma):
            psi_rho_sigma = bundle.transitions[(rho, sigma)].values
            for tau in proper_faces(rho):
                on_tau = psi_rho_sigma[list(face_indices(tau, rho, bundle.depth))]
                composed = bundle.transitions[(tau, rho)].values @ on_tau
                record(tau, rho, sigma, op_norms(bundle.transitions[(tau, sigma)].values - composed))

    return CocycleReport(passed=violation is None, violation=violation, max_residual=max_residual)


def bundle_from_charts(
        base: Complex,
        charts: Mapping[Simplex, SampledUnitaryMap],
        depth: Optional[int] = None
) -> CocycleBundle:
    """
    Bundle whose transitions are the chart quotients psi(rho, sigma) = phi_rho* phi_sigma on |rho|.

    Parameters
    ----------
    base : Complex
        Base complex.
    charts : Mapping[Simplex, SampledUnitaryMap]
        One full unitary map per simplex.
    depth : Optional[int]
        Lattice depth, read from the charts by default.

    Returns
    -------
    bundle : CocycleBundle
        Bundle with exact cocycle relations.
    """
    first = charts[base.simplices[0]]
    depth = first.depth if depth is None else depth
    transitions = {}
    for sigma in base.simplices:
        phi_sigma = charts[sigma].values
        for rho in base.faces_in(sigma):
            if rho == sigma:
                transitions[(rho, sigma)] = identity_map(rho, depth, first.rank)
                continue
            on_rho = phi_sigma[list(face_indices(rho, sigma, depth))]
            transitions[(rho, sigma)] = SampledUnitaryMap(rho, depth, dagger(charts[rho].values) @ on_rho)

    return CocycleBundle(base=base, rank=first.rank, depth=depth, transitions=transitions)


def bundle_from_edge_transports(
        base: Complex,
        rank: int,
        depth: int,
        transports: Mapping[Tuple, np.ndarray]
) -> CocycleBundle:
    """
    Bundle over a complex of dimension at most one with prescribed vertex-chart edge transports. For an edge (a, b),
    a < b, the transition of a is the identity and the transition of b is the transport from a to b; edges missing
    from transports carry the identity.

    Parameters
    ----------
    base : Complex
        Complex of dimension at most one.
    rank : int
        Rank.
    depth : int
        Lattice depth.
    transports : Mapping[Tuple, np.ndarray]
        Unitary transport per directed edge (a, b), a < b.

    Returns
    -------
    bundle : CocycleBundle
        Edge bundle.
    """
    if base.dimension > 1:
        raise ComplexError("Edge transports only determine bundles over 1-dimensional complexes.")

    transitions = {}
    for sigma in base.simplices:
        transitions[(sigma, sigma)] = identity_map(sigma, depth, rank)
        if len(sigma) == 2:
            a, b = sigma
            transitions[((a,), sigma)] = identity_map((a,), depth, rank)
            value = np.asarray(transports.get((a, b), np.eye(rank)), dtype=complex)
            transitions[((b,), sigma)] = SampledUnitaryMap((b,), depth, value[None])

    return CocycleBundle(base=base, rank=rank, depth=depth, transitions=transitions)


def identity_bundle(base: Complex, rank: int = 1, depth: int = DEFAULT_SETTINGS.lattice_depth) -> CocycleBundle:
    """
    Trivial bundle: every transition is the identity.

    Parameters
    ----------
    base : Complex
        Base complex.
    rank : int
        Rank.
    depth : int
        Lattice depth.

    Returns
    -------
    bundle : CocycleBundle
        Identity cocycle.
    """
    return CocycleBundle(
        base=base,
        rank=rank,
        depth=depth,
        transitions={
            (rho, sigma): identity_map(rho, depth, rank) for sigma in base.simplices for rho in base.faces_in(sigma)
        }
    )


"""
    @file:              charts.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the GlobalTrivialization and BundleIso classes, per-simplex families of
                        sampled unitary maps relating a bundle to a single global chart or to another bundle.
"""

from typing import Dict, Mapping

from attrs import field, frozen
import numpy as np

from ..errors import ComplexError, MismatchError
from ..matrixcore import dagger, op_norms
from ..sampled import SampledUnitaryMap
from ..simplicial import Simplex, face_indices
from .cocycle_bundle import CocycleBundle


def _as_charts(charts: Mapping) -> Dict[Simplex, SampledUnitaryMap]:
    return {tuple(s): value for s, value in charts.items()}


def _check_family(bundle: CocycleBundle, family: Mapping[Simplex, SampledUnitaryMap], name: str) -> None:
    for sigma in bundle.base.simplices:
        chart = family.get(sigma)
        if chart is None:
            raise ComplexError(f"Missing {name} on {sigma}.")
        if chart.simplex != sigma or chart.depth != bundle.depth or chart.rank != bundle.rank or chart.boundary_only:
            raise MismatchError(f"The {name} on {sigma} does not match the bundle's rank and depth.")


def _family_audit(family: Mapping[Simplex, SampledUnitaryMap]) -> float:
    return max((chart.lipschitz_estimate() for s, chart in family.items() if len(s) > 1), default=0.0)


@frozen(eq=False)
class GlobalTrivialization:
    """
    Charts psi(rho in X) comparing the trivialization of each simplex with one global trivialization. They satisfy
    psi(rho in X) = psi(rho, sigma) psi(sigma in X) on |rho|.
    """
    bundle: CocycleBundle
    charts: Dict[Simplex, SampledUnitaryMap] = field(converter=_as_charts)

    def __attrs_post_init__(self):
        _check_family(self.bundle, self.charts, "chart")

    def audit(self) -> float:
        """
        Largest Lipschitz estimate of the charts.

        Returns
        -------
        epsilon : float
            Flatness of the global trivialization.
        """
        return _family_audit(self.charts)

    def compatibility_residual(self) -> float:
        """
        Largest ||psi(rho, sigma)(x) psi(sigma in X)(x) - psi(rho in X)(x)|| over all pairs and lattice points.

        Returns
        -------
        residual : float
            Compatibility residual.
        """
        residual = 0.0
        depth = self.bundle.depth
        for rho, sigma in self.bundle.pairs():
            on_rho = self.charts[sigma].values[list(face_indices(rho, sigma, depth))]
            difference = self.bundle.transitions[(rho, sigma)].values @ on_rho - self.charts[rho].values
            residual = max(residual, float(op_norms(difference).max()))

        return residual


@frozen(eq=False)
class BundleIso:
    """
    Conjugators f_rho between two bundles over the same base, satisfying
    psi'(tau, rho) f_rho psi(tau, rho)* = f_tau on |tau|.
    """
    source: CocycleBundle
    target: CocycleBundle
    conjugators: Dict[Simplex, SampledUnitaryMap] = field(converter=_as_charts)

    def __attrs_post_init__(self):
        if self.source.base != self.target.base:
            raise MismatchError("An isomorphism relates bundles over the same base.")
        _check_family(self.source, self.conjugators, "conjugator")

    def audit(self) -> float:
        """
        Largest Lipschitz estimate of the conjugators.

        Returns
        -------
        epsilon : float
            Flatness of the isomorphism.
        """
        return _family_audit(self.conjugators)

    def residual(self) -> float:
        """
        Largest ||psi'(tau, rho) f_rho psi(tau, rho)* - f_tau|| over all pairs and lattice points.

        Returns
        -------
        residual : float
            Intertwining residual.
        """
        residual = 0.0
        depth = self.source.depth
        for tau, rho in self.source.pairs():
            on_tau = self.conjugators[rho].values[list(face_indices(tau, rho, depth))]
            conjugated = self.target.transitions[(tau, rho)].values @ on_tau @ dagger(
                self.source.transitions[(tau, rho)].values
            )
            residual = max(residual, float(op_norms(conjugated - self.conjugators[tau].values).max()))

        return residual

    def is_constant(self, tol: float = 1e-9) -> bool:
        """
        Whether every conjugator is constant over its simplex.

        Returns
        -------
        constant : bool
            True if all conjugators are constant within tol.
        """
        return all(np.abs(f.values - f.values[0]).max() <= tol for f in self.conjugators.values())

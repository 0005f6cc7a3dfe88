"""
    @file:              chern.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the first Chern number of almost flat bundles over closed oriented surfaces,
                        the sum over the oriented triangles of the fluxes of their boundary transports.
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from ..bundle import CocycleBundle
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import ComplexError, PreconditionError, ThresholdError
from ..matrixcore import unitary_eigenphases
from ..simplicial import Complex, Simplex, SimplicialPath
from ..transport import hc_constants, path_transport

logger = logging.getLogger(__name__)

INTEGRALITY_TOL = 1e-6


def face_loops(x: Complex) -> List[Tuple[SimplicialPath, float]]:
    """
    Positively oriented boundary loop of every triangle, weighted by the one-triangle constant c(1).

    Parameters
    ----------
    x : Complex
        Oriented complex.

    Returns
    -------
    loops : List[Tuple[SimplicialPath, float]]
        Loops and weights.
    """
    weight = hc_constants(1).c
    loops = []
    for triangle in x.simplices_of_dimension(2):
        a, b, c = x.oriented_vertices(triangle)
        loops.append((SimplicialPath((a, b, c, a)), weight))

    return loops


def face_fluxes(bundle: CocycleBundle, settings: Settings = DEFAULT_SETTINGS) -> List[Tuple[Simplex, float]]:
    """
    Flux of each triangle, the sum of the eigenphases of the transport around its positively oriented boundary.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over an oriented complex.
    settings : Settings
        Branch margin.

    Returns
    -------
    fluxes : List[Tuple[Simplex, float]]
        Triangle and flux, in simplex order.
    """
    fluxes = []
    for (loop, _), triangle in zip(face_loops(bundle.base), bundle.base.simplices_of_dimension(2)):
        phases = unitary_eigenphases(path_transport(bundle, loop).matrix)
        widest = float(np.max(np.abs(phases)))
        if widest > math.pi - settings.flux_margin:
            raise ThresholdError(
                f"Transport around {triangle} has eigenphase {widest:.6g}, within {settings.flux_margin} of pi.",
                where=triangle,
                value=widest
            )
        fluxes.append((triangle, float(np.sum(phases))))

    return fluxes


def chern_number(bundle: CocycleBundle, settings: Settings = DEFAULT_SETTINGS) -> int:
    """
    First Chern number of a bundle over a closed oriented surface, the total flux divided by 2 pi.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle over a closed oriented surface.
    settings : Settings
        Branch margin.

    Returns
    -------
    chern : int
        Chern number.
    """
    if not bundle.base.is_closed_oriented_surface():
        raise ComplexError("The Chern number is defined over closed oriented surfaces.")

    total = sum(flux for _, flux in face_fluxes(bundle, settings=settings)) / (2 * math.pi)
    chern = round(total)
    if abs(total - chern) > INTEGRALITY_TOL:
        raise PreconditionError(f"Total flux / 2 pi = {total:.9g} is not an integer.")
    logger.debug(f"Total flux / 2 pi = {total:.12g}.")

    return int(chern)

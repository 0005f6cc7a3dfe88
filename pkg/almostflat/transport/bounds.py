"""
    @file:              bounds.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the constants bounding loop transports in terms of flatness and homotopical
                        complexity.
"""

from functools import lru_cache
import math
from typing import NamedTuple

from ..errors import PreconditionError

TWO_SIMPLEX_CONSTANT = 7 * math.sqrt(2)


class HcConstants(NamedTuple):
    """
    Loops of complexity n in an epsilon-flat bundle with epsilon <= delta have ||T - id|| <= c epsilon.
    """
    c: float
    delta: float


@lru_cache(maxsize=None)
def hc_constants(n: int) -> HcConstants:
    """
    Constants c(n) = 3^(n - 1) 7 sqrt(2) and delta(n) = min(1/c(1), 1/c(n - 1), delta(n - 1)), delta(1) = 1/(7 sqrt(2)).

    Parameters
    ----------
    n : int
        Complexity, at least one.

    Returns
    -------
    constants : HcConstants
        (c(n), delta(n)).
    """
    if n < 1:
        raise PreconditionError(f"Complexity must be at least one, got {n}.")
    if n == 1:
        return HcConstants(c=TWO_SIMPLEX_CONSTANT, delta=1 / TWO_SIMPLEX_CONSTANT)

    previous = hc_constants(n - 1)
    return HcConstants(
        c=3 ** (n - 1) * TWO_SIMPLEX_CONSTANT,
        delta=min(1 / TWO_SIMPLEX_CONSTANT, 1 / previous.c, previous.delta)
    )


def two_simplex_bound(epsilon: float) -> float:
    """
    Bound 7 sqrt(2) epsilon on the boundary transport defect of a 2-simplex, valid for epsilon <= 1/sqrt(2).

    Parameters
    ----------
    epsilon : float
        Flatness.

    Returns
    -------
    bound : float
        Defect bound.
    """
    if epsilon > 1 / math.sqrt(2):
        raise PreconditionError(f"The two-simplex bound needs epsilon <= 1/sqrt(2), got {epsilon:.6g}.")

    return TWO_SIMPLEX_CONSTANT * epsilon


def product_perturbation_bound(n: int, epsilon: float) -> float:
    """
    Bound (2^n - 1) epsilon on ||A_n B_n ... A_1 B_1 - id|| when A_n ... A_1 = id and ||B_i - id|| < epsilon <= 1.

    Parameters
    ----------
    n : int
        Number of factors.
    epsilon : float
        Perturbation size.

    Returns
    -------
    bound : float
        Defect bound.
    """
    if not 0 <= epsilon <= 1:
        raise PreconditionError(f"The product bound needs 0 <= epsilon <= 1, got {epsilon:.6g}.")

    return (2 ** n - 1) * epsilon

"""
    @file:              functional_calculus.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the functional calculus used to move between unitary matrices and
                        skew-Hermitian matrices: the power series of (1 + v^2)^(1/2), the parametrization
                        g(v) = v + (1 + v^2)^(1/2), the polar projection onto the unitary group and the exponential and
                        principal logarithm of unitaries.
"""

import logging

import numpy as np
from scipy import linalg

from ..errors import PreconditionError
from .norms import dagger, is_skew, op_norm

logger = logging.getLogger(__name__)

SERIES_RADIUS = 0.5


def _check_small_skew(v: np.ndarray, tol: float) -> float:
    if not is_skew(v, tol=max(tol, 1e-12)):
        raise PreconditionError("Expected a skew-Hermitian matrix, got a matrix with a non-negligible Hermitian part.")

    norm = op_norm(v)
    if norm >= SERIES_RADIUS:
        raise PreconditionError(f"Expected ||v|| < {SERIES_RADIUS}, got ||v|| = {norm:.6g}.")

    return norm


def sqrt_one_plus_vsq(
        v: np.ndarray,
        tol: float = 1e-9
) -> np.ndarray:
    """
    Square root of 1 + v^2 for a small skew-Hermitian v, summed from the binomial series of (1 + z^2)^(1/2). The series
    is truncated at the first term whose norm falls below tol * (1 - 4||v||^2).

    Parameters
    ----------
    v : np.ndarray
        Skew-Hermitian matrix with ||v|| < 1/2.
    tol : float
        Residual tolerance.

    Returns
    -------
    w : np.ndarray
        Hermitian matrix w with w^2 = 1 + v^2 within tol.
    """
    v = np.asarray(v, dtype=complex)
    norm = _check_small_skew(v, tol)
    cutoff = tol * (1 - 4 * norm ** 2)

    v_squared = v @ v
    power = np.eye(v.shape[-1], dtype=complex)
    coefficient = 1.0
    result = power.copy()
    j = 0
    while True:
        coefficient *= (0.5 - j) / (j + 1)
        power = power @ v_squared
        term = coefficient * power
        result += term
        j += 1
        if np.linalg.norm(term) < cutoff:
            break

    logger.debug(f"Series for (1 + v^2)^(1/2) truncated after {j} terms at ||v|| = {norm:.4g}.")

    return (result + dagger(result)) / 2


def sqrt_one_plus_vsq_spectral(v: np.ndarray) -> np.ndarray:
    """
    Square root of 1 + v^2 computed from the Hermitian eigendecomposition of 1 + v^2. Kept as an independent check of
    the series.

    Parameters
    ----------
    v : np.ndarray
        Skew-Hermitian matrix with ||v|| < 1.

    Returns
    -------
    w : np.ndarray
        Positive square root of 1 + v^2.
    """
    v = np.asarray(v, dtype=complex)
    a = np.eye(v.shape[-1]) + v @ v
    eigenvalues, eigenvectors = linalg.eigh((a + dagger(a)) / 2)

    return (eigenvectors * np.sqrt(np.clip(eigenvalues, 0.0, None))) @ dagger(eigenvectors)


def unitarize_g(
        v: np.ndarray,
        tol: float = 1e-9
) -> np.ndarray:
    """
    The map g(v) = v + (1 + v^2)^(1/2) from small skew-Hermitian matrices to unitaries. g(0) = id and g inverts the
    skew projection near the identity.

    Parameters
    ----------
    v : np.ndarray
        Skew-Hermitian matrix with ||v|| < 1/2.
    tol : float
        Residual tolerance of the square root.

    Returns
    -------
    u : np.ndarray
        Unitary matrix.
    """
    v = np.asarray(v, dtype=complex)
    return v + sqrt_one_plus_vsq(v, tol=tol)


def polar_project(
        x: np.ndarray,
        reach: float = 7 / 9
) -> np.ndarray:
    """
    Retraction x -> (xx*)^(-1/2) x of near-unitary matrices onto the unitary group.

    Parameters
    ----------
    x : np.ndarray
        Square matrix with ||xx* - 1|| < reach.
    reach : float
        Largest accepted distance of xx* from the identity.

    Returns
    -------
    u : np.ndarray
        The unitary factor of the left polar decomposition of x.
    """
    x = np.asarray(x, dtype=complex)
    if x.shape == (1, 1):
        modulus = abs(x[0, 0])
        if abs(modulus ** 2 - 1) >= reach:
            raise PreconditionError(f"Scalar too far from the unit circle: |x| = {modulus:.6g}.")
        return x / modulus

    gram = x @ dagger(x)
    distance = op_norm(gram - np.eye(x.shape[-1]))
    if distance >= reach:
        raise PreconditionError(f"Matrix too far from the unitary group: ||xx* - 1|| = {distance:.6g} >= {reach:.6g}.")

    eigenvalues, eigenvectors = linalg.eigh((gram + dagger(gram)) / 2)
    inverse_sqrt = (eigenvectors / np.sqrt(eigenvalues)) @ dagger(eigenvectors)

    return inverse_sqrt @ x


def expi_hermitian(h: np.ndarray) -> np.ndarray:
    """
    exp(ih) for a Hermitian matrix or a stack of Hermitian matrices.

    Parameters
    ----------
    h : np.ndarray
        Hermitian matrix or stack of shape (N, n, n).

    Returns
    -------
    u : np.ndarray
        Unitary matrix or stack.
    """
    h = np.asarray(h, dtype=complex)
    eigenvalues, eigenvectors = np.linalg.eigh((h + dagger(h)) / 2)
    phases = np.exp(1j * eigenvalues)

    return (eigenvectors * phases[..., None, :]) @ dagger(eigenvectors)


def unitary_eigenphases(u: np.ndarray) -> np.ndarray:
    """
    Principal arguments, in (-pi, pi], of the eigenvalues of a unitary matrix.

    Parameters
    ----------
    u : np.ndarray
        Unitary matrix.

    Returns
    -------
    phases : np.ndarray
        Eigenphases.
    """
    return np.angle(np.linalg.eigvals(np.asarray(u, dtype=complex)))


def unitary_log(
        u: np.ndarray,
        margin: float = 0.0
) -> np.ndarray:
    """
    Principal logarithm of a unitary matrix, a skew-Hermitian matrix with eigenvalues in i(-pi, pi). The complex Schur
    form of a unitary is diagonal up to rounding, so the logarithm is taken on the Schur diagonal.

    Parameters
    ----------
    u : np.ndarray
        Unitary matrix whose eigenphases avoid pi by more than margin.
    margin : float
        Required distance of every eigenphase from the branch cut.

    Returns
    -------
    log : np.ndarray
        Skew-Hermitian matrix with exp(log) = u.
    """
    u = np.asarray(u, dtype=complex)
    schur_form, basis = linalg.schur(u, output="complex")
    phases = np.angle(np.diag(schur_form))
    if phases.size and np.max(np.abs(phases)) > np.pi - margin:
        raise PreconditionError(
            f"Unitary eigenphase {np.max(np.abs(phases)):.6g} is within {margin} of the logarithm branch cut."
        )

    log = (basis * (1j * phases)) @ dagger(basis)

    return (log - dagger(log)) / 2

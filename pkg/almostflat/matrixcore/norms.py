"""
    @file:              norms.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the operator norm and the elementary predicates and projections on complex
                        square matrices (adjoint, unitarity, skew-Hermitian projection).
"""

import numpy as np

EIGH_DIMENSION_LIMIT = 32


def dagger(a: np.ndarray) -> np.ndarray:
    """
    Conjugate transpose over the last two axes.

    Parameters
    ----------
    a : np.ndarray
        A matrix or a stack of matrices.

    Returns
    -------
    adjoint : np.ndarray
        The adjoint(s).
    """
    return np.conj(np.swapaxes(a, -1, -2))


def op_norm(
        m: np.ndarray,
        seed: int = 0,
        rtol: float = 1e-13,
        max_iterations: int = 10000
) -> float:
    """
    Operator norm (largest singular value) of a complex matrix. Below EIGH_DIMENSION_LIMIT the largest eigenvalue of
    M*M is computed by a full Hermitian eigensolve, above it by power iteration from a seeded start vector.

    Parameters
    ----------
    m : np.ndarray
        Square complex matrix.
    seed : int
        Seed of the power iteration start vector.
    rtol : float
        Relative change of the Rayleigh quotient at which power iteration stops.
    max_iterations : int
        Power iteration budget.

    Returns
    -------
    norm : float
        The operator norm.
    """
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0

    gram = dagger(m) @ m
    if m.shape[-1] < EIGH_DIMENSION_LIMIT:
        top = np.linalg.eigvalsh(gram)[-1]
        return float(np.sqrt(max(top, 0.0)))

    rng = np.random.default_rng(seed)
    x = rng.standard_normal(m.shape[-1]) + 1j * rng.standard_normal(m.shape[-1])
    x /= np.linalg.norm(x)
    rayleigh = 0.0
    for _ in range(max_iterations):
        y = gram @ x
        norm_y = np.linalg.norm(y)
        if norm_y == 0.0:
            return 0.0
        x = y / norm_y
        new_rayleigh = float(np.real(np.vdot(x, gram @ x)))
        if abs(new_rayleigh - rayleigh) <= rtol * new_rayleigh:
            rayleigh = new_rayleigh
            break
        rayleigh = new_rayleigh

    return float(np.sqrt(max(rayleigh, 0.0)))


def op_norms(stack: np.ndarray) -> np.ndarray:
    """
    Operator norms of a stack of matrices, computed in one batched singular value call.

    Parameters
    ----------
    stack : np.ndarray
        Array of shape (N, n, n).

    Returns
    -------
    norms : np.ndarray
        Array of shape (N,).
    """
    stack = np.asarray(stack, dtype=complex)
    if stack.shape[0] == 0:
        return np.zeros(0)

    return np.linalg.svd(stack, compute_uv=False)[..., 0]


def distance_to_identity(u: np.ndarray) -> float:
    """
    The norm ||u - id||.

    Parameters
    ----------
    u : np.ndarray
        Square matrix.

    Returns
    -------
    distance : float
        Operator norm distance to the identity.
    """
    return op_norm(u - np.eye(u.shape[-1]))


def unitarity_residual(u: np.ndarray) -> float:
    """
    The norm ||uu* - id|| of a matrix, zero exactly for unitaries. Stacks are reduced with a max.

    Parameters
    ----------
    u : np.ndarray
        A matrix or a stack of matrices.

    Returns
    -------
    residual : float
        Largest residual.
    """
    u = np.asarray(u, dtype=complex)
    stack = u.reshape((-1,) + u.shape[-2:])
    residuals = op_norms(stack @ dagger(stack) - np.eye(u.shape[-1]))

    return float(residuals.max()) if residuals.size else 0.0


def is_unitary(u: np.ndarray, tol: float = 1e-8) -> bool:
    """
    Whether a matrix (or every matrix of a stack) is unitary within tol.

    Parameters
    ----------
    u : np.ndarray
        A matrix or a stack of matrices.
    tol : float
        Tolerance on ||uu* - id||.

    Returns
    -------
    unitary : bool
        True if unitary within tol.
    """
    return unitarity_residual(u) <= tol


def skew_project(a: np.ndarray) -> np.ndarray:
    """
    Projection (a - a*)/2 onto the skew-Hermitian matrices. The remainder a - skew_project(a) is Hermitian.

    Parameters
    ----------
    a : np.ndarray
        A matrix or a stack of matrices.

    Returns
    -------
    skew : np.ndarray
        Skew-Hermitian part.
    """
    a = np.asarray(a, dtype=complex)
    return (a - dagger(a)) / 2


def is_skew(v: np.ndarray, tol: float = 1e-9) -> bool:
    """
    Whether v* = -v within tol (operator norm).

    Parameters
    ----------
    v : np.ndarray
        Square matrix.
    tol : float
        Tolerance.

    Returns
    -------
    skew : bool
        True if skew-Hermitian within tol.
    """
    return op_norm(v + dagger(v)) <= tol * max(1.0, op_norm(v))

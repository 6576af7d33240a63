"""
Dense complex matrix kernel for the small operators of the two- and three-qubit models.

Every function is pure: inputs are never mutated and results are fresh arrays.
"""

import logging
import math
from typing import Tuple

import numpy as np

from ..handlers.error_handler import (
    InvalidInputError,
    NotHermitianError,
    NotPositiveError,
    NumericalFailureError,
)
from ..utils.constants import (
    ALLOWED_DIMENSIONS,
    EXPM_SCALED_NORM,
    EXPM_TAYLOR_ORDER,
    HERMITIAN_TOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFFDIAG_TOL,
    PSD_CLAMP_TOL,
)

logger = logging.getLogger(__name__)

# Single-qubit operators, basis order (|1>, |0>)
IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a complex128 matrix and check the kernel's shape and finiteness rules"""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise InvalidInputError(f"expected a 2-D matrix, got shape {arr.shape}", shape=arr.shape)
    rows, cols = arr.shape
    if rows not in ALLOWED_DIMENSIONS or cols not in ALLOWED_DIMENSIONS:
        raise InvalidInputError(
            f"matrix dimensions {rows}x{cols} not in {ALLOWED_DIMENSIONS}", shape=arr.shape
        )
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("matrix has NaN or infinite entries", shape=arr.shape)
    return arr


def _square(m) -> np.ndarray:
    arr = as_complex_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got {arr.shape}", shape=arr.shape)
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def hermiticity_deviation(m) -> float:
    """Largest entry of |m - m^H|"""
    arr = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(arr - dagger(arr))))


def kron(a, b) -> np.ndarray:
    """Kronecker product; the result must still fit in 16x16"""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > ALLOWED_DIMENSIONS[-1] or cols > ALLOWED_DIMENSIONS[-1]:
        raise InvalidInputError(
            f"Kronecker product would be {rows}x{cols}, beyond {ALLOWED_DIMENSIONS[-1]}",
            shape=(rows, cols),
        )
    return np.kron(a, b)


def vec(m) -> np.ndarray:
    """Column-stack a matrix: A rho B maps to (B^T kron A) vec(rho)"""
    return np.asarray(m, dtype=complex).reshape(-1, order='F')


def unvec(v, dim: int) -> np.ndarray:
    return np.asarray(v, dtype=complex).reshape((dim, dim), order='F')


def _jacobi_rotation(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero a[p, q] in place with a unitary plane rotation, accumulating it into v"""
    b = a[p, q]
    mag = abs(b)
    phase = b / mag
    theta = 0.5 * math.atan2(2.0 * mag, (a[q, q] - a[p, p]).real)
    c = math.cos(theta)
    s = math.sin(theta)
    # diag(1, e^{-i alpha}) followed by the real rotation that kills |b|
    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=complex)
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = dagger(g) @ a[idx, :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    v[:, idx] = v[:, idx] @ g


def hermitian_eigensystem(m) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decompose a Hermitian matrix with cyclic Jacobi sweeps.

    Returns:
        (eigenvalues ascending, eigenvectors as orthonormal columns)
    """
    a = _square(m)
    deviation = hermiticity_deviation(a)
    if deviation > HERMITIAN_TOL:
        raise NotHermitianError(deviation, HERMITIAN_TOL)

    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    threshold = JACOBI_OFFDIAG_TOL * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _jacobi_rotation(a, v, p, q)
    else:
        raise NumericalFailureError(
            f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps", off_diagonal=off
        )

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(eigenvalues, kind='stable')
    return eigenvalues[order], v[:, order]


def matrix_exponential(m) -> np.ndarray:
    """exp(m) by scaling and squaring around a truncated Taylor series"""
    a = _square(m)
    n = a.shape[0]
    norm = float(np.max(np.sum(np.abs(a), axis=0)))
    squarings = 0
    if norm > EXPM_SCALED_NORM:
        squarings = int(math.ceil(math.log2(norm / EXPM_SCALED_NORM)))
    scaled = a / (2.0**squarings)

    identity = np.eye(n, dtype=complex)
    result = identity.copy()
    for k in range(EXPM_TAYLOR_ORDER, 0, -1):
        result = identity + (scaled @ result) / k

    for _ in range(squarings):
        result = result @ result

    logger.debug("expm: norm=%.3g squarings=%d", norm, squarings)
    return result


def psd_sqrt(m, floor: float = 0.0) -> np.ndarray:
    """
    Hermitian positive-semidefinite square root.

    Eigenvalues at or below `floor` are treated as zero; negative ones beyond
    PSD_CLAMP_TOL raise NotPositiveError.
    """
    eigenvalues, vectors = hermitian_eigensystem(m)
    if eigenvalues[0] < -PSD_CLAMP_TOL:
        raise NotPositiveError(float(eigenvalues[0]), PSD_CLAMP_TOL)
    roots = np.sqrt(np.where(eigenvalues > floor, eigenvalues, 0.0))
    return (vectors * roots) @ dagger(vectors)

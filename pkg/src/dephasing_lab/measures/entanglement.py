"""
Concurrence and Von Neumann entropy, general and X-state closed forms
"""

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from ..handlers.error_handler import InvalidDensityMatrixError, InvalidInputError
from ..linalg import SIGMA_Y, dagger, hermitian_eigensystem, kron, psd_sqrt
from ..states import DensityMatrix, XStateCoefficients, validate_density
from ..utils.constants import EIGENVALUE_FLOOR, MEASURE_SLACK

SIGMA_YY = kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class MeasureResult:
    value: float
    method: Literal['general', 'closed-form']


def _clamp(value: float, upper: float) -> float:
    if value < -MEASURE_SLACK or value > upper + MEASURE_SLACK:
        raise InvalidInputError(f"measure value {value!r} outside [0, {upper}]")
    return min(max(value, 0.0), upper)


def _checked_matrix(rho) -> np.ndarray:
    mat = np.asarray(getattr(rho, 'mat', rho), dtype=complex)
    diagnostics = validate_density(mat)
    if not diagnostics.passed:
        raise InvalidDensityMatrixError("not a valid density matrix", **diagnostics.as_dict())
    return mat


def spin_flipped(mat: np.ndarray) -> np.ndarray:
    """(sy x sy) rho* (sy x sy)"""
    return SIGMA_YY @ np.conj(mat) @ SIGMA_YY


def spin_flip_spectrum(rho) -> np.ndarray:
    """
    Eigenvalues of R = rho (sy x sy) rho* (sy x sy) as the roots of its
    characteristic polynomial, in decreasing order. Slow but independent of the
    Hermitian route; used to cross-check it.
    """
    mat = np.asarray(getattr(rho, 'mat', rho), dtype=complex)
    r = mat @ spin_flipped(mat)
    roots = np.roots(np.poly(r))
    return np.sort(np.real(roots))[::-1]


def concurrence(rho: DensityMatrix) -> float:
    """
    Wootters concurrence max(l1 - l2 - l3 - l4, 0).

    The l_i are the eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)), whose squares
    are the eigenvalues of R = rho rho~, so only the Hermitian kernel is needed.
    """
    mat = _checked_matrix(rho)
    sqrt_rho = psd_sqrt(mat, floor=EIGENVALUE_FLOOR)
    product = sqrt_rho @ spin_flipped(mat) @ sqrt_rho
    root = psd_sqrt(0.5 * (product + dagger(product)), floor=EIGENVALUE_FLOOR)
    spectrum, _ = hermitian_eigensystem(0.5 * (root + dagger(root)))
    lambdas = np.clip(spectrum, 0.0, None)[::-1]
    value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    return _clamp(max(float(value), 0.0), 1.0)


def concurrence_x(x: XStateCoefficients) -> float:
    """2 max(0, |f| - sqrt(a d))"""
    value = 2.0 * max(0.0, abs(x.f) - np.sqrt(max(x.a, 0.0) * max(x.d, 0.0)))
    return _clamp(float(value), 1.0)


def _entropy_bits(probabilities) -> float:
    p = np.asarray(probabilities, dtype=float)
    p = p[p > EIGENVALUE_FLOOR]
    return float(-np.sum(p * np.log2(p)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-Tr(rho log2 rho) in bits"""
    mat = _checked_matrix(rho)
    eigenvalues, _ = hermitian_eigensystem(mat)
    return _clamp(_entropy_bits(eigenvalues), 2.0)


def entropy_x(x: XStateCoefficients) -> float:
    """-a log a - d log d - b+ log b+ - b- log b-, b+- = (b + c +- sqrt((b - c)^2 + 4|f|^2))/2"""
    root = np.sqrt((x.b - x.c) ** 2 + 4.0 * abs(x.f) ** 2)
    beta_plus = 0.5 * (x.b + x.c + root)
    beta_minus = 0.5 * (x.b + x.c - root)
    return _clamp(_entropy_bits([x.a, x.d, beta_plus, beta_minus]), 2.0)


def measure(
    state: Union[DensityMatrix, XStateCoefficients],
    kind: Literal['concurrence', 'entropy'],
) -> MeasureResult:
    """Dispatch to the closed form for X-state coefficients, the general path otherwise"""
    if kind not in ('concurrence', 'entropy'):
        raise InvalidInputError(f"unknown measure {kind!r}")
    if isinstance(state, XStateCoefficients):
        fn = concurrence_x if kind == 'concurrence' else entropy_x
        return MeasureResult(fn(state), 'closed-form')
    fn = concurrence if kind == 'concurrence' else von_neumann_entropy
    return MeasureResult(fn(state), 'general')

"""
Constructors for the initial states of the model and X-state extraction
"""

from typing import Union

import numpy as np

from ..handlers.error_handler import InvalidInputError, PatternViolationError
from ..utils.constants import BELL_KINDS, STATE_DESCRIPTOR_HELP, X_STATE_PATTERN_TOL
from .types import (
    BASIS_LABELS,
    X_STATE_PATTERN,
    ConditionalBlocks,
    DensityMatrix,
    XStateCoefficients,
)

_SQRT_HALF = np.sqrt(0.5)

# |Psi+-> = (|11> +- |00>)/sqrt2, |Phi+-> = (|10> +- |01>)/sqrt2
BELL_VECTORS = {
    'psi+': _SQRT_HALF * np.array([1, 0, 0, 1], dtype=complex),
    'psi-': _SQRT_HALF * np.array([1, 0, 0, -1], dtype=complex),
    'phi+': _SQRT_HALF * np.array([0, 1, 1, 0], dtype=complex),
    'phi-': _SQRT_HALF * np.array([0, 1, -1, 0], dtype=complex),
}


def pure_state(vector) -> DensityMatrix:
    psi = np.asarray(vector, dtype=complex)
    norm = np.linalg.norm(psi)
    if psi.shape != (4,) or norm == 0:
        raise InvalidInputError(f"expected a non-zero 4-vector, got shape {psi.shape}")
    psi = psi / norm
    return DensityMatrix(np.outer(psi, np.conj(psi)))


def bell_state(kind: str) -> DensityMatrix:
    key = kind.lower()
    if key not in BELL_VECTORS:
        raise InvalidInputError(f"unknown Bell state {kind!r}; expected one of {BELL_KINDS}")
    return pure_state(BELL_VECTORS[key])


def werner_state(r: float) -> DensityMatrix:
    """r |Phi-><Phi-| + (1 - r)/4 I (x) I"""
    if not 0.0 <= r <= 1.0:
        raise InvalidInputError(f"Werner weight r={r!r} outside [0, 1]", r=r)
    phi = BELL_VECTORS['phi-']
    mat = r * np.outer(phi, np.conj(phi)) + (1.0 - r) / 4.0 * np.eye(4)
    return DensityMatrix(mat)


def ghz_blocks() -> ConditionalBlocks:
    """(|11>|H> + |00>|V>)/sqrt2 split into qubit-3 conditional blocks"""
    hh = np.zeros((4, 4), dtype=complex)
    vv = np.zeros((4, 4), dtype=complex)
    hv = np.zeros((4, 4), dtype=complex)
    hh[0, 0] = 0.5
    vv[3, 3] = 0.5
    hv[0, 3] = 0.5
    return ConditionalBlocks(hh, hv, hv.conj().T, vv)


def as_x_state(rho: DensityMatrix, tol: float = X_STATE_PATTERN_TOL) -> XStateCoefficients:
    """Read a, b, c, d, f off a density matrix that has the stationary X-state sparsity"""
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    magnitudes = np.abs(mat)
    worst, worst_entry = 0.0, None
    for i in range(4):
        for j in range(4):
            if (i, j) not in X_STATE_PATTERN and magnitudes[i, j] >= worst:
                worst, worst_entry = float(magnitudes[i, j]), (BASIS_LABELS[i], BASIS_LABELS[j])
    if worst >= tol:
        raise PatternViolationError("not an X-state of the stationary form", worst_entry, worst, tol)

    populations = np.real(np.diag(mat))
    return XStateCoefficients(
        a=float(populations[0]),
        b=float(populations[1]),
        c=float(populations[2]),
        d=float(populations[3]),
        f=complex(mat[1, 2]),
    )


def random_density(rng: np.random.Generator, rank: int = 4) -> DensityMatrix:
    """Ginibre-distributed mixed state of the given rank"""
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    mat = g @ g.conj().T
    return DensityMatrix(mat / np.trace(mat).real)


def random_x_state(rng: np.random.Generator) -> XStateCoefficients:
    a, b, c, d = rng.dirichlet(np.ones(4))
    magnitude = np.sqrt(b * c) * rng.uniform()
    f = magnitude * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return XStateCoefficients(float(a), float(b), float(c), float(d), complex(f))


def parse_state(descriptor: str) -> Union[DensityMatrix, ConditionalBlocks]:
    """Parse 'phi+', 'phi-', 'psi+', 'psi-', 'werner:<r>' or 'ghz'"""
    text = descriptor.strip().lower()
    if text in BELL_KINDS:
        return bell_state(text)
    if text == 'ghz':
        return ghz_blocks()
    if text.startswith('werner:'):
        try:
            r = float(text.split(':', 1)[1])
        except ValueError:
            raise InvalidInputError(f"bad Werner weight in {descriptor!r}") from None
        return werner_state(r)
    raise InvalidInputError(f"unknown state {descriptor!r}; expected {STATE_DESCRIPTOR_HELP}")


def parse_two_qubit_state(descriptor: str) -> DensityMatrix:
    state = parse_state(descriptor)
    if isinstance(state, ConditionalBlocks):
        raise InvalidInputError(f"{descriptor!r} is a three-qubit state; a two-qubit state is needed here")
    return state

"""
State containers: two-qubit density matrices, X-state coefficients and the
qubit-3 conditional blocks of the three-qubit GHZ model.

Basis order for two qubits is |11>, |10>, |01>, |00>; qubit 3 uses |H>, |V>.
"""

from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from ..handlers.error_handler import InvalidDensityMatrixError, InvalidInputError
from ..linalg import dagger, hermitian_eigensystem, hermiticity_deviation
from ..utils.constants import (
    BLOCK_ADJOINT_TOL,
    BLOCK_PSD_TOL,
    COHERENCE_TOL,
    HERMITIAN_TOL,
    MIN_EIGENVALUE_TOL,
    POPULATION_TOL,
    TRACE_TOL,
)

BASIS_LABELS = ('11', '10', '01', '00')
QUBIT3_LABELS = ('H', 'V')

# Entries a stationary X-state may populate
X_STATE_PATTERN = frozenset({(0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 1)})


@dataclass(frozen=True)
class DensityDiagnostics:
    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float
    passed: bool

    def as_dict(self) -> Dict[str, float]:
        return {
            'hermiticity_deviation': self.hermiticity_deviation,
            'trace_deviation': self.trace_deviation,
            'min_eigenvalue': self.min_eigenvalue,
            'passed': self.passed,
        }


def validate_density(matrix) -> DensityDiagnostics:
    """Report how far a 4x4 matrix is from being a valid density matrix"""
    mat = np.asarray(getattr(matrix, 'mat', matrix), dtype=complex)
    herm = hermiticity_deviation(mat)
    trace_dev = abs(complex(np.trace(mat)) - 1.0)
    # eigenvalues of the Hermitian part, so the report exists even for bad input
    eigenvalues, _ = hermitian_eigensystem(0.5 * (mat + dagger(mat)))
    min_eig = float(eigenvalues[0])
    passed = herm <= HERMITIAN_TOL and trace_dev <= TRACE_TOL and min_eig >= MIN_EIGENVALUE_TOL
    return DensityDiagnostics(herm, trace_dev, min_eig, passed)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Two-qubit state; validated on construction unless `validate=False`"""

    mat: np.ndarray
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        mat = np.array(self.mat, dtype=complex)
        if mat.shape != (4, 4):
            raise InvalidInputError(f"two-qubit density matrix must be 4x4, got {mat.shape}")
        mat.setflags(write=False)
        object.__setattr__(self, 'mat', mat)
        if self.validate:
            diagnostics = validate_density(mat)
            if not diagnostics.passed:
                raise InvalidDensityMatrixError(
                    "not a valid density matrix", **diagnostics.as_dict()
                )

    def entry(self, row: str, col: str) -> complex:
        return complex(self.mat[BASIS_LABELS.index(row), BASIS_LABELS.index(col)])

    @property
    def trace(self) -> float:
        return float(np.trace(self.mat).real)


@dataclass(frozen=True)
class XStateCoefficients:
    """a|11><11| + b|10><10| + c|01><01| + d|00><00| + f|10><01| + f*|01><10|"""

    a: float
    b: float
    c: float
    d: float
    f: complex

    def __post_init__(self):
        populations = (self.a, self.b, self.c, self.d)
        if min(populations) < POPULATION_TOL:
            raise InvalidInputError(f"negative population in {populations}")
        if abs(sum(populations) - 1.0) > TRACE_TOL:
            raise InvalidInputError(f"populations sum to {sum(populations)!r}, not 1")
        if abs(self.f) ** 2 > self.b * self.c + COHERENCE_TOL:
            raise InvalidInputError(
                f"|f|^2 = {abs(self.f) ** 2:.3e} exceeds b*c = {self.b * self.c:.3e}"
            )

    def to_matrix(self) -> np.ndarray:
        mat = np.diag([self.a, self.b, self.c, self.d]).astype(complex)
        mat[1, 2] = self.f
        mat[2, 1] = np.conj(self.f)
        return mat

    def to_density(self) -> DensityMatrix:
        return DensityMatrix(self.to_matrix())

    def as_dict(self) -> Dict[str, float]:
        return {
            'a': self.a,
            'b': self.b,
            'c': self.c,
            'd': self.d,
            'f_real': float(np.real(self.f)),
            'f_imag': float(np.imag(self.f)),
        }


_H = np.array([1.0, 0.0])
_V = np.array([0.0, 1.0])


@dataclass(frozen=True, eq=False)
class ConditionalBlocks:
    """Three-qubit state written as sum_{k,l} rho_kl (x) |k><l| over qubit-3 labels H, V"""

    rho_hh: np.ndarray
    rho_hv: np.ndarray
    rho_vh: np.ndarray
    rho_vv: np.ndarray

    def __post_init__(self):
        for name in ('rho_hh', 'rho_hv', 'rho_vh', 'rho_vv'):
            block = np.array(getattr(self, name), dtype=complex)
            if block.shape != (4, 4):
                raise InvalidInputError(f"{name} must be 4x4, got {block.shape}")
            block.setflags(write=False)
            object.__setattr__(self, name, block)

    def blocks(self):
        return self.rho_hh, self.rho_hv, self.rho_vh, self.rho_vv

    def assemble(self) -> np.ndarray:
        """8x8 matrix with qubit 3 as the rightmost tensor factor"""
        return (
            np.kron(self.rho_hh, np.outer(_H, _H))
            + np.kron(self.rho_hv, np.outer(_H, _V))
            + np.kron(self.rho_vh, np.outer(_V, _H))
            + np.kron(self.rho_vv, np.outer(_V, _V))
        )

    def validate(self) -> "ConditionalBlocks":
        for name, block in (('rho_hh', self.rho_hh), ('rho_vv', self.rho_vv)):
            deviation = hermiticity_deviation(block)
            if deviation > HERMITIAN_TOL:
                raise InvalidDensityMatrixError(f"{name} is not Hermitian", deviation=deviation)
            if np.trace(block).real < -TRACE_TOL:
                raise InvalidDensityMatrixError(f"{name} has negative trace")
        total = float(np.trace(self.rho_hh).real + np.trace(self.rho_vv).real)
        if abs(total - 1.0) > TRACE_TOL:
            raise InvalidDensityMatrixError("block traces do not sum to 1", trace=total)
        adjoint_gap = float(np.max(np.abs(self.rho_vh - dagger(self.rho_hv))))
        if adjoint_gap > BLOCK_ADJOINT_TOL:
            raise InvalidDensityMatrixError("rho_vh is not rho_hv^H", deviation=adjoint_gap)
        eigenvalues, _ = hermitian_eigensystem(self.assemble())
        if eigenvalues[0] < -BLOCK_PSD_TOL:
            raise InvalidDensityMatrixError(
                "assembled three-qubit state is not positive", min_eigenvalue=float(eigenvalues[0])
            )
        return self

    def total_trace(self) -> float:
        return float(np.trace(self.rho_hh).real + np.trace(self.rho_vv).real)

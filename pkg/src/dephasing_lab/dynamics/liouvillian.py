"""
Generator of the driven collective-dephasing master equation

    d rho/dt = -(i/2)[Omega1 sx^(1), rho] + (gamma/2)(2 Jz rho Jz - Jz^2 rho - rho Jz^2)

represented as a 16x16 superoperator on column-stacked density matrices.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..handlers.error_handler import InvalidInputError
from ..linalg import IDENTITY_2, SIGMA_X, SIGMA_Z, kron, matrix_exponential, unvec, vec

logger = logging.getLogger(__name__)

_IDENTITY_4 = np.eye(4, dtype=complex)


@dataclass(frozen=True)
class ChannelParams:
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise InvalidInputError(f"decay rate gamma must be positive and finite, got {self.gamma!r}")


@dataclass(frozen=True)
class DrivePulse:
    """Step pulse Omega1(t) = Omega1 * Theta(T - t)"""

    omega1: float
    duration_t: float

    def __post_init__(self):
        if not (math.isfinite(self.omega1) and self.omega1 >= 0):
            raise InvalidInputError(f"drive amplitude must be >= 0, got {self.omega1!r}")
        if not (math.isfinite(self.duration_t) and self.duration_t >= 0):
            raise InvalidInputError(f"pulse duration must be >= 0, got {self.duration_t!r}")

    @classmethod
    def from_scaled(cls, omega_ratio: float, gamma_t: float, gamma: float) -> "DrivePulse":
        """Build a pulse from the dimensionless (Omega1/gamma, gamma*T) coordinates"""
        return cls(omega1=omega_ratio * gamma, duration_t=gamma_t / gamma)


def jz_operator() -> np.ndarray:
    """Collective spin Jz = (sz^(1) + sz^(2))/2 = diag(1, 0, 0, -1)"""
    return 0.5 * (kron(SIGMA_Z, IDENTITY_2) + kron(IDENTITY_2, SIGMA_Z))


def drive_hamiltonian(omega1: float) -> np.ndarray:
    return 0.5 * omega1 * kron(SIGMA_X, IDENTITY_2)


@dataclass(frozen=True, eq=False)
class Liouvillian:
    superop: np.ndarray
    omega1: float
    gamma: float

    def apply(self, rho) -> np.ndarray:
        matrix = getattr(rho, 'mat', rho)
        return unvec(self.superop @ vec(matrix), 4)

    def trace_residual(self) -> float:
        """Largest entry of vec(I)^T L, zero for a trace-preserving generator"""
        return float(np.max(np.abs(vec(_IDENTITY_4) @ self.superop)))


def build_liouvillian(omega1: float, params: ChannelParams) -> Liouvillian:
    if not (math.isfinite(omega1) and omega1 >= 0):
        raise InvalidInputError(f"drive amplitude must be >= 0, got {omega1!r}")
    h = drive_hamiltonian(omega1)
    jz = jz_operator()
    jz2 = jz @ jz

    # A rho B -> (B^T kron A) vec(rho)
    coherent = -1j * (np.kron(_IDENTITY_4, h) - np.kron(h.T, _IDENTITY_4))
    dissipator = 0.5 * params.gamma * (
        2.0 * np.kron(jz.T, jz) - np.kron(_IDENTITY_4, jz2) - np.kron(jz2.T, _IDENTITY_4)
    )
    superop = coherent + dissipator
    superop.setflags(write=False)
    logger.debug("built Liouvillian omega1=%g gamma=%g", omega1, params.gamma)
    return Liouvillian(superop=superop, omega1=float(omega1), gamma=float(params.gamma))


@dataclass(frozen=True, eq=False)
class Propagator:
    """exp(L t) for a fixed generator; safe to share between threads"""

    liouvillian: Liouvillian

    def matrix(self, t: float) -> np.ndarray:
        if t < 0:
            raise InvalidInputError(f"propagation time must be >= 0, got {t!r}")
        return matrix_exponential(self.liouvillian.superop * float(t))

    def evolve(self, rho, t: float) -> np.ndarray:
        matrix = getattr(rho, 'mat', rho)
        return unvec(self.matrix(t) @ vec(matrix), 4)

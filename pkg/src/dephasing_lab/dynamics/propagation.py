"""
Time evolution of two-qubit states and the stationary state after a finite drive

The generator is piecewise constant (drive on for t <= T, off afterwards), so
each segment is propagated with one exact matrix exponential. RK4 is kept only
as an independent oracle.
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from ..handlers.error_handler import InvalidInputError, NumericalFailureError
from ..linalg import hermitian_eigensystem, hermiticity_deviation, unvec, vec
from ..states import DensityMatrix, XStateCoefficients, as_x_state
from ..utils.constants import (
    PROPAGATION_HERMITIAN_TOL,
    PROPAGATION_MIN_EIGENVALUE,
    PROPAGATION_TRACE_TOL,
    RK4_MAX_STEP_GAMMA,
    RK4_MAX_STEP_RABI,
    STATIONARY_RESIDUAL_TOL,
)
from .liouvillian import (
    ChannelParams,
    DrivePulse,
    Liouvillian,
    Propagator,
    build_liouvillian,
    jz_operator,
)

logger = logging.getLogger(__name__)

_JZ_DIAG = np.real(np.diag(jz_operator()))
# True where the two basis states share a Jz eigenvalue
_DEGENERATE_MASK = np.equal.outer(_JZ_DIAG, _JZ_DIAG)
_JZ_GAP_SQUARED = np.subtract.outer(_JZ_DIAG, _JZ_DIAG) ** 2


def _matrix_of(rho) -> np.ndarray:
    return np.asarray(getattr(rho, 'mat', rho), dtype=complex)


def checked_density(mat: np.ndarray, context: str) -> DensityMatrix:
    """Wrap a propagated matrix, failing loudly if it drifted off the state space"""
    trace_dev = abs(complex(np.trace(mat)) - 1.0)
    herm = hermiticity_deviation(mat)
    if trace_dev > PROPAGATION_TRACE_TOL or herm > PROPAGATION_HERMITIAN_TOL:
        raise NumericalFailureError(
            f"{context}: trace deviation {trace_dev:.3e}, Hermiticity deviation {herm:.3e}",
            trace_deviation=trace_dev,
            hermiticity_deviation=herm,
        )
    eigenvalues, _ = hermitian_eigensystem(0.5 * (mat + mat.conj().T))
    if eigenvalues[0] < PROPAGATION_MIN_EIGENVALUE:
        raise NumericalFailureError(
            f"{context}: positivity lost, min eigenvalue {eigenvalues[0]:.3e}",
            min_eigenvalue=float(eigenvalues[0]),
        )
    return DensityMatrix(mat, validate=False)


def propagate(
    rho0: DensityMatrix,
    omega1: float,
    params: ChannelParams,
    t: float,
    liouvillian: Optional[Liouvillian] = None,
) -> DensityMatrix:
    """unvec(exp(L t) vec(rho0)) for a constant drive amplitude"""
    if t < 0:
        raise InvalidInputError(f"propagation time must be >= 0, got {t!r}", t=t)
    if t == 0:
        return rho0
    generator = liouvillian if liouvillian is not None else build_liouvillian(omega1, params)
    mat = Propagator(generator).evolve(rho0, t)
    return checked_density(mat, f"propagate(t={t:g})")


def propagate_rk4(
    rho0: DensityMatrix,
    omega1: float,
    params: ChannelParams,
    t: float,
    step: float,
) -> DensityMatrix:
    """Classical fixed-step fourth-order Runge-Kutta integration of the same equation"""
    if t < 0:
        raise InvalidInputError(f"propagation time must be >= 0, got {t!r}", t=t)
    max_step = RK4_MAX_STEP_GAMMA / params.gamma
    if omega1 > 0:
        max_step = min(max_step, RK4_MAX_STEP_RABI / omega1)
    if not 0 < step <= max_step:
        raise InvalidInputError(
            f"RK4 step {step!r} must be in (0, {max_step:.4g}]", step=step, max_step=max_step
        )
    if t == 0:
        return rho0

    superop = build_liouvillian(omega1, params).superop
    n_steps = max(1, int(math.ceil(t / step - 1e-12)))
    h = t / n_steps
    y = vec(_matrix_of(rho0))
    for _ in range(n_steps):
        k1 = superop @ y
        k2 = superop @ (y + 0.5 * h * k1)
        k3 = superop @ (y + 0.5 * h * k2)
        k4 = superop @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    logger.debug("rk4: %d steps of %.3g", n_steps, h)
    return checked_density(unvec(y, 4), f"propagate_rk4(t={t:g})")


def closed_form_dephasing(rho0: DensityMatrix, gamma: float, t: float) -> np.ndarray:
    """Undriven solution rho_mn(t) = rho_mn(0) exp(-gamma (m - n)^2 t / 2)"""
    return _matrix_of(rho0) * np.exp(-0.5 * gamma * t * _JZ_GAP_SQUARED)


def dephasing_fixed_point(rho: DensityMatrix) -> DensityMatrix:
    """t -> infinity limit of the undriven channel: drop coherences between distinct Jz values"""
    mat = np.where(_DEGENERATE_MASK, _matrix_of(rho), 0.0)
    return DensityMatrix(mat, validate=False)


def stationary_residual(rho, params: ChannelParams) -> float:
    """||L0 vec(rho)|| with the undriven generator; below STATIONARY_RESIDUAL_TOL counts as stationary"""
    undriven = build_liouvillian(0.0, params)
    return float(np.linalg.norm(undriven.superop @ vec(_matrix_of(rho))))


def stationary_state(
    rho0: DensityMatrix,
    pulse: DrivePulse,
    params: ChannelParams,
    liouvillian: Optional[Liouvillian] = None,
) -> XStateCoefficients:
    driven = propagate(rho0, pulse.omega1, params, pulse.duration_t, liouvillian=liouvillian)
    fixed = dephasing_fixed_point(driven)
    residual = stationary_residual(fixed, params)
    if residual > STATIONARY_RESIDUAL_TOL:
        raise NumericalFailureError(
            f"stationary state not annihilated by the undriven generator: residual {residual:.3e}",
            residual=residual,
        )
    return as_x_state(fixed)


def evolve_trajectory(
    rho0: DensityMatrix,
    pulse: DrivePulse,
    params: ChannelParams,
    times: Sequence[float],
) -> List[DensityMatrix]:
    """States at each requested time, drive on up to T and free dephasing afterwards"""
    if any(t < 0 for t in times):
        raise InvalidInputError("trajectory times must be >= 0")
    driven = build_liouvillian(pulse.omega1, params)
    free = build_liouvillian(0.0, params)
    end_of_pulse = propagate(rho0, pulse.omega1, params, pulse.duration_t, liouvillian=driven)

    states = []
    for t in times:
        if t <= pulse.duration_t:
            states.append(propagate(rho0, pulse.omega1, params, t, liouvillian=driven))
        else:
            states.append(
                propagate(end_of_pulse, 0.0, params, t - pulse.duration_t, liouvillian=free)
            )
    return states

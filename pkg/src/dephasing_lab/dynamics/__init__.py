"""
Driven collective-dephasing dynamics of two qubits
"""

from .liouvillian import (
    ChannelParams,
    DrivePulse,
    Liouvillian,
    Propagator,
    build_liouvillian,
    drive_hamiltonian,
    jz_operator,
)
from .propagation import (
    checked_density,
    closed_form_dephasing,
    dephasing_fixed_point,
    evolve_trajectory,
    propagate,
    propagate_rk4,
    stationary_residual,
    stationary_state,
)

__all__ = [
    "ChannelParams",
    "DrivePulse",
    "Liouvillian",
    "Propagator",
    "build_liouvillian",
    "checked_density",
    "closed_form_dephasing",
    "dephasing_fixed_point",
    "drive_hamiltonian",
    "evolve_trajectory",
    "jz_operator",
    "propagate",
    "propagate_rk4",
    "stationary_residual",
    "stationary_state",
]

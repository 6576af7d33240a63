"""
GHZ quantum eraser: remote control of two-qubit entanglement through qubit 3
"""

from .ghz import (
    ZETA_POSITIONS,
    GhzStationaryCoefficients,
    MeasurementBasis,
    average_concurrence,
    closed_form_average_concurrence,
    evolve_blocks,
    extract_coefficients,
    measurement_outcomes,
    project_qubit3,
    stationary_blocks,
    stationary_ghz_blocks,
    trace_out_qubit3,
)

__all__ = [
    "ZETA_POSITIONS",
    "GhzStationaryCoefficients",
    "MeasurementBasis",
    "average_concurrence",
    "closed_form_average_concurrence",
    "evolve_blocks",
    "extract_coefficients",
    "measurement_outcomes",
    "project_qubit3",
    "stationary_blocks",
    "stationary_ghz_blocks",
    "trace_out_qubit3",
]

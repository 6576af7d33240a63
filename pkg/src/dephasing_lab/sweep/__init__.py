"""
Parameter sweeps and extrema analysis
"""

from .engine import (
    ERASER_COLUMNS,
    MIXEDNESS_COLUMNS,
    STATIONARY_COLUMNS,
    SweepRecord,
    SweepSpec,
    default_gamma_t_grid,
    default_theta_grid,
    linear_grid,
    sweep_eraser,
    sweep_mixedness,
    sweep_stationary,
)
from .extrema import ExtremaReport, extrema_correspondence, local_extrema

__all__ = [
    "ERASER_COLUMNS",
    "MIXEDNESS_COLUMNS",
    "STATIONARY_COLUMNS",
    "ExtremaReport",
    "SweepRecord",
    "SweepSpec",
    "default_gamma_t_grid",
    "default_theta_grid",
    "extrema_correspondence",
    "linear_grid",
    "local_extrema",
    "sweep_eraser",
    "sweep_mixedness",
    "sweep_stationary",
]

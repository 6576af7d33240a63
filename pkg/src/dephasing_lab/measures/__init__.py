"""
Entanglement and information measures
"""

from .entanglement import (
    MeasureResult,
    concurrence,
    concurrence_x,
    entropy_x,
    measure,
    spin_flip_spectrum,
    spin_flipped,
    von_neumann_entropy,
)

__all__ = [
    "MeasureResult",
    "concurrence",
    "concurrence_x",
    "entropy_x",
    "measure",
    "spin_flip_spectrum",
    "spin_flipped",
    "von_neumann_entropy",
]

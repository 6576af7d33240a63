"""
Initial states, validators and X-state extraction
"""

from .constructors import (
    BELL_VECTORS,
    as_x_state,
    bell_state,
    ghz_blocks,
    parse_state,
    parse_two_qubit_state,
    pure_state,
    random_density,
    random_x_state,
    werner_state,
)
from .types import (
    BASIS_LABELS,
    X_STATE_PATTERN,
    ConditionalBlocks,
    DensityDiagnostics,
    DensityMatrix,
    XStateCoefficients,
    validate_density,
)

__all__ = [
    "BASIS_LABELS",
    "BELL_VECTORS",
    "X_STATE_PATTERN",
    "ConditionalBlocks",
    "DensityDiagnostics",
    "DensityMatrix",
    "XStateCoefficients",
    "as_x_state",
    "bell_state",
    "ghz_blocks",
    "parse_state",
    "parse_two_qubit_state",
    "pure_state",
    "random_density",
    "random_x_state",
    "validate_density",
    "werner_state",
]

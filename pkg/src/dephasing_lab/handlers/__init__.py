"""
Error handling and response formatting
"""

from .error_handler import (
    DephasingLabError,
    ErrorHandler,
    ImpossibleOutcomeError,
    InvalidDensityMatrixError,
    InvalidInputError,
    NotHermitianError,
    NotPositiveError,
    NumericalFailureError,
    PatternViolationError,
)
from .response import ResponseFormatter

__all__ = [
    "DephasingLabError",
    "ErrorHandler",
    "ImpossibleOutcomeError",
    "InvalidDensityMatrixError",
    "InvalidInputError",
    "NotHermitianError",
    "NotPositiveError",
    "NumericalFailureError",
    "PatternViolationError",
    "ResponseFormatter",
]

"""
Error types and the error handler that turns them into actionable analyses
"""

from typing import Any, Dict

from ..utils.constants import (
    ERROR_SUGGESTIONS,
    EXIT_INVALID_INPUT,
    EXIT_NUMERICAL_FAILURE,
)


class DephasingLabError(Exception):
    """Base class for every error raised by the library"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


class InvalidInputError(DephasingLabError, ValueError):
    """Parameters, dimensions or descriptors outside their allowed range"""


class NotHermitianError(DephasingLabError, ValueError):
    def __init__(self, deviation: float, tol: float):
        super().__init__(
            f"matrix is not Hermitian: max |m - m^H| = {deviation:.3e} exceeds {tol:.1e}",
            deviation=deviation,
            tol=tol,
        )
        self.deviation = deviation


class NotPositiveError(DephasingLabError, ValueError):
    def __init__(self, min_eigenvalue: float, tol: float):
        super().__init__(
            f"matrix is not positive semidefinite: eigenvalue {min_eigenvalue:.3e} below {-tol:.1e}",
            min_eigenvalue=min_eigenvalue,
            tol=tol,
        )
        self.min_eigenvalue = min_eigenvalue


class InvalidDensityMatrixError(DephasingLabError, ValueError):
    """Raised with the diagnostics of a failed density-matrix validation"""


class PatternViolationError(DephasingLabError, ValueError):
    def __init__(self, what: str, entry: tuple, magnitude: float, tol: float):
        super().__init__(
            f"{what}: entry {entry} has magnitude {magnitude:.3e} >= {tol:.1e}",
            entry=entry,
            magnitude=magnitude,
            tol=tol,
        )
        self.entry = entry
        self.magnitude = magnitude


class ImpossibleOutcomeError(DephasingLabError, ValueError):
    def __init__(self, outcome: int, probability: float):
        super().__init__(
            f"outcome {outcome} has probability {probability:.3e}; normalization undefined",
            outcome=outcome,
            probability=probability,
        )
        self.probability = probability


class NumericalFailureError(DephasingLabError, RuntimeError):
    """A computation produced a state that violates its invariants"""


class ErrorHandler:
    def __init__(self):
        # Map of error types to handlers, most specific first
        self.error_handlers = [
            (NotHermitianError, self.handle_not_hermitian),
            (NotPositiveError, self.handle_not_positive),
            (InvalidDensityMatrixError, self.handle_invalid_density),
            (PatternViolationError, self.handle_pattern_violation),
            (ImpossibleOutcomeError, self.handle_impossible_outcome),
            (NumericalFailureError, self.handle_numerical_failure),
            (InvalidInputError, self.handle_invalid_input),
        ]

    def parse_error(self, error: BaseException) -> Dict[str, Any]:
        """Analyse an exception and generate suggestions"""
        handler = self.handle_generic_error
        for error_type, candidate in self.error_handlers:
            if isinstance(error, error_type):
                handler = candidate
                break

        analysis = handler(error)
        analysis['message'] = str(error)
        analysis['details'] = dict(getattr(error, 'details', {}))
        return analysis

    def handle_invalid_input(self, error: InvalidInputError) -> Dict[str, Any]:
        return {
            'error_type': 'InvalidInput',
            'suggestions': [ERROR_SUGGESTIONS['invalid_input']],
            'exit_code': EXIT_INVALID_INPUT,
        }

    def handle_not_hermitian(self, error: NotHermitianError) -> Dict[str, Any]:
        return {
            'error_type': 'NotHermitian',
            'suggestions': [
                ERROR_SUGGESTIONS['not_hermitian'],
                f"Offending deviation: {error.deviation:.3e}",
            ],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_not_positive(self, error: NotPositiveError) -> Dict[str, Any]:
        return {
            'error_type': 'NotPositive',
            'suggestions': [ERROR_SUGGESTIONS['not_positive']],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_invalid_density(self, error: InvalidDensityMatrixError) -> Dict[str, Any]:
        return {
            'error_type': 'InvalidDensityMatrix',
            'suggestions': [ERROR_SUGGESTIONS['invalid_density']],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_pattern_violation(self, error: PatternViolationError) -> Dict[str, Any]:
        return {
            'error_type': 'PatternViolation',
            'entry': error.entry,
            'suggestions': [ERROR_SUGGESTIONS['pattern']],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_impossible_outcome(self, error: ImpossibleOutcomeError) -> Dict[str, Any]:
        return {
            'error_type': 'ImpossibleOutcome',
            'suggestions': [
                ERROR_SUGGESTIONS['impossible_outcome'],
                "Pick the other outcome or change theta",
            ],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_numerical_failure(self, error: NumericalFailureError) -> Dict[str, Any]:
        return {
            'error_type': 'NumericalFailure',
            'suggestions': [ERROR_SUGGESTIONS['numerical']],
            'exit_code': EXIT_NUMERICAL_FAILURE,
        }

    def handle_generic_error(self, error: BaseException) -> Dict[str, Any]:
        """Handle errors raised outside the library hierarchy"""
        exit_code = EXIT_INVALID_INPUT if isinstance(error, (ValueError, TypeError)) else EXIT_NUMERICAL_FAILURE
        return {
            'error_type': type(error).__name__,
            'suggestions': [
                "An unexpected error occurred",
                "Re-run with --verbose to see the debug log",
            ],
            'exit_code': exit_code,
        }

"""
Dense complex linear algebra kernel
"""

from .kernel import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    as_complex_matrix,
    dagger,
    hermitian_eigensystem,
    hermiticity_deviation,
    kron,
    matrix_exponential,
    psd_sqrt,
    unvec,
    vec,
)

__all__ = [
    "IDENTITY_2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "as_complex_matrix",
    "dagger",
    "hermitian_eigensystem",
    "hermiticity_deviation",
    "kron",
    "matrix_exponential",
    "psd_sqrt",
    "unvec",
    "vec",
]

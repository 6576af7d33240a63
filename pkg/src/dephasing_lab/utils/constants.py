"""
Shared constants and configuration for the dephasing simulations
"""

import math

# Matrix dimensions the kernel accepts
ALLOWED_DIMENSIONS = (2, 4, 8, 16)

# Linear algebra tolerances
HERMITIAN_TOL = 1e-10
PSD_CLAMP_TOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-14
JACOBI_MAX_SWEEPS = 64
EXPM_TAYLOR_ORDER = 18
EXPM_SCALED_NORM = 0.5

# Density matrix invariants
TRACE_TOL = 1e-10
MIN_EIGENVALUE_TOL = -1e-10
POPULATION_TOL = -1e-12
COHERENCE_TOL = 1e-10
X_STATE_PATTERN_TOL = 1e-8
BLOCK_ADJOINT_TOL = 1e-12
BLOCK_PSD_TOL = 1e-9

# Propagation checks
PROPAGATION_TRACE_TOL = 1e-9
PROPAGATION_HERMITIAN_TOL = 1e-9
PROPAGATION_MIN_EIGENVALUE = -1e-9
RK4_MAX_STEP_GAMMA = 0.05
RK4_MAX_STEP_RABI = 0.05 * 2 * math.pi
STATIONARY_RESIDUAL_TOL = 1e-10

# Measures
EIGENVALUE_FLOOR = 1e-12
MEASURE_SLACK = 1e-12

# Quantum eraser
GHZ_PATTERN_TOL = 1e-9
IMPOSSIBLE_OUTCOME_PROB = 1e-12
BASIS_ORTHONORMAL_TOL = 1e-12

# Sweep defaults (the plotted gamma*T range is not stated; [0, 2] covers ~13 Rabi cycles)
DEFAULT_OMEGA_RATIO = 41.25
DEFAULT_GAMMA = 1.0
DEFAULT_GAMMA_T_MIN = 0.0
DEFAULT_GAMMA_T_MAX = 2.0
DEFAULT_GAMMA_T_POINTS = 401
DEFAULT_THETA_POINTS = 61
DEFAULT_R_POINTS = 21
DEFAULT_EXTREMA_WINDOW = 2
DEFAULT_WORKERS = 1

# Output
CSV_SIGNIFICANT_DIGITS = 12
OUTPUT_FORMATS = ('csv', 'json')

# Exit statuses
EXIT_OK = 0
EXIT_NUMERICAL_FAILURE = 1
EXIT_INVALID_INPUT = 2

# State descriptors accepted on the command line
BELL_KINDS = ('phi+', 'phi-', 'psi+', 'psi-')
STATE_DESCRIPTOR_HELP = "phi+, phi-, psi+, psi-, werner:<r> or ghz"

# Names of the acceptance checks run by `verify`
VERIFY_CHECKS = (
    'dichotomy',
    'x-closed-forms',
    'propagator',
    'phi-oscillation',
    'psi-separable',
    'extrema',
    'werner',
    'ghz-structure',
    'eraser-closed-form',
    'remote-control',
    'conservation',
)

# Error messages surfaced by the CLI and the MCP tools
ERROR_SUGGESTIONS = {
    'invalid_input': "Check the flag values against --help; grids must be ascending and non-empty",
    'not_hermitian': "The matrix is not Hermitian; symmetrise it or check how it was assembled",
    'not_positive': "The matrix has negative eigenvalues beyond tolerance",
    'invalid_density': "Density matrices must be Hermitian, unit-trace and positive semidefinite",
    'pattern': "The state does not have the expected X-state or GHZ block sparsity",
    'impossible_outcome': "The requested measurement outcome has zero probability",
    'numerical': "Propagation lost trace or positivity; reduce gamma*T or the drive ratio",
}

SUCCESS_MESSAGES = {
    'evolve': "Trajectory computed",
    'stationary': "Stationary state computed",
    'sweep': "Sweep finished",
    'eraser-sweep': "Eraser sweep finished",
    'mixedness-sweep': "Mixedness sweep finished",
    'verify': "All acceptance checks passed",
}

# Acceptance suite sizes
VERIFY_SEED = 20240611
VERIFY_RANDOM_SAMPLES = 10_000
VERIFY_PROPAGATOR_STATES = 20
VERIFY_RK4_STEP_GAMMA = 1e-4
VERIFY_PROPAGATOR_TOL = 1e-6
VERIFY_MEASURE_TOL = 1e-9
VERIFY_CONSERVATION_TRACE_TOL = 1e-12
VERIFY_REMOTE_CONTROL_MIN_C_AVE = 0.1

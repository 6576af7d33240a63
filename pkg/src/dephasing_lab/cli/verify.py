"""
Acceptance checks run by `dephasing-lab verify`

Each check compares against its tolerance with a strict inequality, so a
tolerance scale of 0 makes every tolerance-based check fail.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..dynamics import (
    ChannelParams,
    DrivePulse,
    build_liouvillian,
    propagate,
    propagate_rk4,
    stationary_state,
)
from ..eraser import (
    ZETA_POSITIONS,
    MeasurementBasis,
    average_concurrence,
    closed_form_average_concurrence,
    evolve_blocks,
    extract_coefficients,
    measurement_outcomes,
    stationary_ghz_blocks,
    trace_out_qubit3,
)
from ..handlers.error_handler import InvalidInputError
from ..linalg import hermitian_eigensystem
from ..measures import concurrence, concurrence_x, entropy_x, von_neumann_entropy
from ..states import bell_state, ghz_blocks, random_density, random_x_state, werner_state
from ..sweep import (
    SweepSpec,
    default_gamma_t_grid,
    extrema_correspondence,
    linear_grid,
    local_extrema,
    sweep_stationary,
)
from ..utils.constants import (
    DEFAULT_EXTREMA_WINDOW,
    DEFAULT_OMEGA_RATIO,
    GHZ_PATTERN_TOL,
    PROPAGATION_MIN_EIGENVALUE,
    TRACE_TOL,
    VERIFY_CHECKS,
    VERIFY_CONSERVATION_TRACE_TOL,
    VERIFY_MEASURE_TOL,
    VERIFY_PROPAGATOR_STATES,
    VERIFY_PROPAGATOR_TOL,
    VERIFY_RANDOM_SAMPLES,
    VERIFY_REMOTE_CONTROL_MIN_C_AVE,
    VERIFY_RK4_STEP_GAMMA,
    VERIFY_SEED,
)

logger = logging.getLogger(__name__)

_GAMMA = 1.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def as_dict(self) -> Dict[str, object]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail, 'seconds': self.seconds}


def _min_eigenvalue(mat: np.ndarray) -> float:
    eigenvalues, _ = hermitian_eigensystem(0.5 * (mat + mat.conj().T))
    return float(eigenvalues[0])


@dataclass
class ConservationTally:
    """Trace drift and lowest eigenvalue over every propagated state recorded so far"""

    states: int = 0
    worst_trace: float = 0.0
    lowest: float = 0.0

    def record(self, mat: np.ndarray) -> None:
        self.states += 1
        self.worst_trace = max(self.worst_trace, abs(complex(np.trace(mat)) - 1.0))
        self.lowest = min(self.lowest, _min_eigenvalue(mat))


@dataclass(frozen=True)
class VerifyContext:
    tolerance_scale: float = 1.0
    samples: int = VERIFY_RANDOM_SAMPLES
    seed: int = VERIFY_SEED
    # filled by every check that propagates; read by the conservation check
    tally: ConservationTally = field(default_factory=ConservationTally, compare=False)

    def within(self, error: float, tol: float) -> bool:
        return error < tol * self.tolerance_scale

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


class CheckFailed(Exception):
    pass


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _check_dichotomy(ctx: VerifyContext) -> str:
    params = ChannelParams(_GAMMA)
    undriven = build_liouvillian(0.0, params)
    worst = 0.0
    for gamma_t in (0.5, 1.0, 5.0):
        t = gamma_t / _GAMMA
        for kind in ('phi+', 'phi-', 'psi+', 'psi-'):
            rho = propagate(bell_state(kind), 0.0, params, t, liouvillian=undriven)
            ctx.tally.record(rho.mat)
            expected = 1.0 if kind.startswith('phi') else math.exp(-2.0 * gamma_t)
            worst = max(worst, abs(concurrence(rho) - expected))
    _require(ctx.within(worst, VERIFY_MEASURE_TOL), f"max deviation {worst:.3e}")
    return f"Phi stays 1, Psi decays as exp(-2 gamma t); max deviation {worst:.2e}"


def _check_x_closed_forms(ctx: VerifyContext) -> str:
    rng = ctx.rng()
    worst_c = worst_s = 0.0
    for _ in range(ctx.samples):
        x = random_x_state(rng)
        rho = x.to_density()
        worst_c = max(worst_c, abs(concurrence_x(x) - concurrence(rho)))
        worst_s = max(worst_s, abs(entropy_x(x) - von_neumann_entropy(rho)))
    _require(
        ctx.within(worst_c, VERIFY_MEASURE_TOL) and ctx.within(worst_s, VERIFY_MEASURE_TOL),
        f"concurrence gap {worst_c:.3e}, entropy gap {worst_s:.3e}",
    )
    return f"{ctx.samples} X-states; gaps C {worst_c:.2e}, S {worst_s:.2e}"


def _check_propagator(ctx: VerifyContext) -> str:
    rng = ctx.rng()
    params = ChannelParams(_GAMMA)
    omega1 = DEFAULT_OMEGA_RATIO * _GAMMA
    liouvillian = build_liouvillian(omega1, params)
    step = VERIFY_RK4_STEP_GAMMA / _GAMMA
    worst = 0.0
    for _ in range(VERIFY_PROPAGATOR_STATES):
        rho0 = random_density(rng)
        for gamma_t in (0.1, 0.5, 2.0):
            t = gamma_t / _GAMMA
            exact = propagate(rho0, omega1, params, t, liouvillian=liouvillian).mat
            ctx.tally.record(exact)
            oracle = propagate_rk4(rho0, omega1, params, t, step).mat
            worst = max(worst, float(np.max(np.abs(exact - oracle))))
    _require(ctx.within(worst, VERIFY_PROPAGATOR_TOL), f"expm vs RK4 gap {worst:.3e}")
    return f"expm vs RK4 on {VERIFY_PROPAGATOR_STATES} states; max gap {worst:.2e}"


def _stationary_curve(initial: str, workers: int = 1):
    spec = SweepSpec(DEFAULT_OMEGA_RATIO, _GAMMA, initial, default_gamma_t_grid(), workers=workers)
    return sweep_stationary(spec)


def _check_phi_oscillation(ctx: VerifyContext) -> str:
    records = _stationary_curve('phi-')
    first = records[0]
    _require(ctx.within(abs(first.concurrence - 1.0), VERIFY_MEASURE_TOL), f"C_s(0) = {first.concurrence!r}")
    _require(ctx.within(abs(first.entropy), VERIFY_MEASURE_TOL), f"S(0) = {first.entropy!r}")

    counts = {}
    for column in ('concurrence', 'entropy'):
        values = [getattr(r, column) for r in records]
        _require(max(values) > min(values), f"{column} is constant")
        maxima, minima = local_extrema(values)
        counts[column] = len(maxima) + len(minima)
        _require(counts[column] >= 2, f"{column} has only {counts[column]} interior extrema")
    return f"C_s(0)=1, S(0)=0; interior extrema C {counts['concurrence']}, S {counts['entropy']}"


def _check_psi_separable(ctx: VerifyContext) -> str:
    x = stationary_state(bell_state('psi+'), DrivePulse(DEFAULT_OMEGA_RATIO * _GAMMA, 0.0), ChannelParams(_GAMMA))
    c = concurrence_x(x)
    _require(ctx.within(abs(c), VERIFY_MEASURE_TOL), f"C_s(0) = {c!r}")
    return "Psi+ separable at gamma*T = 0"


def _check_extrema(ctx: VerifyContext) -> str:
    summaries = []
    for initial in ('phi-', 'werner:0.8', 'psi+'):
        report = extrema_correspondence(_stationary_curve(initial), DEFAULT_EXTREMA_WINDOW)
        _require(
            report.holds,
            f"{initial}: concurrence maxima without entropy minima at indices "
            f"{[m['index'] for m in report.unmatched]}",
        )
        summaries.append(
            f"{initial} {report.matched}/{len(report.concurrence_maxima)}"
            f" ({len(report.unpaired_entropy_minima)} entropy minima unpaired)"
        )
    return "maxima matched: " + ", ".join(summaries)


def _check_werner(ctx: VerifyContext) -> str:
    x = stationary_state(werner_state(0.8), DrivePulse(DEFAULT_OMEGA_RATIO * _GAMMA, 0.0), ChannelParams(_GAMMA))
    expected_s = -0.85 * math.log2(0.85) - 3 * 0.05 * math.log2(0.05)
    c_gap = abs(concurrence_x(x) - 0.7)
    s_gap = abs(entropy_x(x) - expected_s)
    _require(ctx.within(c_gap, VERIFY_MEASURE_TOL), f"C_s = {concurrence_x(x)!r}, expected 0.7")
    _require(ctx.within(s_gap, VERIFY_MEASURE_TOL), f"S = {entropy_x(x)!r}, expected {expected_s!r}")
    return f"C_s = 0.7, S = {expected_s:.10f}"


def _off_pattern_magnitude(blocks) -> float:
    allowed = {(block, row, col) for block, row, col in ZETA_POSITIONS.values()}
    worst = 0.0
    for name, block in zip(('hh', 'hv', 'vh', 'vv'), blocks.blocks()):
        for row in range(4):
            for col in range(4):
                if (name, row, col) not in allowed:
                    worst = max(worst, float(abs(block[row, col])))
    return worst


def _check_ghz_structure(ctx: VerifyContext) -> str:
    rng = ctx.rng()
    params = ChannelParams(_GAMMA)
    worst_entry = worst_sum = 0.0
    for _ in range(10):
        pulse = DrivePulse.from_scaled(rng.uniform(0.0, 60.0), rng.uniform(0.0, 2.0), _GAMMA)
        blocks = stationary_ghz_blocks(pulse, params)
        ctx.tally.record(blocks.assemble())
        worst_entry = max(worst_entry, _off_pattern_magnitude(blocks))
        zeta = extract_coefficients(blocks)
        total = zeta.zeta_a + zeta.zeta_b + zeta.zeta_c + zeta.zeta_d
        worst_sum = max(worst_sum, abs(total - 1.0))
    _require(ctx.within(worst_entry, GHZ_PATTERN_TOL), f"off-pattern entry {worst_entry:.3e}")
    _require(ctx.within(worst_sum, TRACE_TOL), f"zeta sum off by {worst_sum:.3e}")
    return f"10 random pulses; off-pattern {worst_entry:.1e}, sum error {worst_sum:.1e}"


def _check_eraser_closed_form(ctx: VerifyContext) -> str:
    params = ChannelParams(_GAMMA)
    liouvillian = build_liouvillian(DEFAULT_OMEGA_RATIO * _GAMMA, params)
    thetas = linear_grid(0.0, math.pi, 21)
    phis = [2.0 * math.pi * k / 21 for k in range(21)]
    worst_form = worst_phi = worst_edge = 0.0
    for gamma_t in (0.1, 0.5, 1.0, 1.5, 2.0):
        pulse = DrivePulse.from_scaled(DEFAULT_OMEGA_RATIO, gamma_t, _GAMMA)
        blocks = stationary_ghz_blocks(pulse, params, liouvillian)
        ctx.tally.record(blocks.assemble())
        zeta = extract_coefficients(blocks)
        for theta in thetas:
            expected = closed_form_average_concurrence(zeta, theta)
            values = [average_concurrence(blocks, MeasurementBasis(theta, phi)) for phi in phis]
            worst_form = max(worst_form, max(abs(v - expected) for v in values))
            worst_phi = max(worst_phi, max(values) - min(values))
            if theta in (0.0, math.pi):
                worst_edge = max(worst_edge, max(values))
    _require(ctx.within(worst_form, VERIFY_MEASURE_TOL), f"closed-form gap {worst_form:.3e}")
    _require(ctx.within(worst_phi, VERIFY_MEASURE_TOL), f"phi dependence {worst_phi:.3e}")
    _require(ctx.within(worst_edge, VERIFY_MEASURE_TOL), f"C_ave at theta in {{0, pi}} is {worst_edge:.3e}")
    return f"21x21 (theta, phi) at 5 gamma*T; max gap {worst_form:.2e}"


def _check_remote_control(ctx: VerifyContext) -> str:
    params = ChannelParams(_GAMMA)
    liouvillian = build_liouvillian(DEFAULT_OMEGA_RATIO * _GAMMA, params)
    basis = MeasurementBasis(math.pi / 2)
    worst_traced = 0.0
    best = (0.0, 0.0)
    for gamma_t in linear_grid(0.0, 2.0, 101):
        blocks = stationary_ghz_blocks(DrivePulse.from_scaled(DEFAULT_OMEGA_RATIO, gamma_t, _GAMMA), params, liouvillian)
        ctx.tally.record(blocks.assemble())
        worst_traced = max(worst_traced, concurrence(trace_out_qubit3(blocks)))
        c_ave = average_concurrence(blocks, basis)
        if c_ave > best[1]:
            best = (gamma_t, c_ave)
    _require(ctx.within(worst_traced, VERIFY_MEASURE_TOL), f"traced-out concurrence {worst_traced:.3e}")
    _require(
        best[1] > VERIFY_REMOTE_CONTROL_MIN_C_AVE,
        f"best C_ave {best[1]:.3f} does not exceed {VERIFY_REMOTE_CONTROL_MIN_C_AVE}",
    )
    return f"traced-out C = 0; best C_ave {best[1]:.4f} at gamma*T = {best[0]:.3f}"


def _check_conservation(ctx: VerifyContext) -> str:
    rng = ctx.rng()
    params = ChannelParams(_GAMMA)
    initial = [bell_state(k) for k in ('phi+', 'phi-', 'psi+', 'psi-')]
    initial += [werner_state(0.8)] + [random_density(rng) for _ in range(5)]
    tally = ctx.tally
    for omega_ratio in (0.0, DEFAULT_OMEGA_RATIO):
        liouvillian = build_liouvillian(omega_ratio * _GAMMA, params)
        for gamma_t in (0.1, 0.5, 1.0, 2.0, 5.0):
            t = gamma_t / _GAMMA
            for rho0 in initial:
                tally.record(propagate(rho0, omega_ratio * _GAMMA, params, t, liouvillian=liouvillian).mat)
            blocks = evolve_blocks(ghz_blocks(), omega_ratio * _GAMMA, params, t, liouvillian)
            tally.record(blocks.assemble())
            for entry in measurement_outcomes(blocks, MeasurementBasis(math.pi / 2)):
                _require(entry['probability'] >= 0.0, "negative outcome probability")
    _require(ctx.within(tally.worst_trace, VERIFY_CONSERVATION_TRACE_TOL), f"trace drift {tally.worst_trace:.3e}")
    _require(
        tally.lowest > PROPAGATION_MIN_EIGENVALUE * ctx.tolerance_scale,
        f"min eigenvalue {tally.lowest:.3e}",
    )
    return f"{tally.states} propagated states; trace drift {tally.worst_trace:.1e}, min eigenvalue {tally.lowest:.1e}"


CHECKS: Dict[str, Callable[[VerifyContext], str]] = {
    'dichotomy': _check_dichotomy,
    'x-closed-forms': _check_x_closed_forms,
    'propagator': _check_propagator,
    'phi-oscillation': _check_phi_oscillation,
    'psi-separable': _check_psi_separable,
    'extrema': _check_extrema,
    'werner': _check_werner,
    'ghz-structure': _check_ghz_structure,
    'eraser-closed-form': _check_eraser_closed_form,
    'remote-control': _check_remote_control,
    'conservation': _check_conservation,
}

def run_check(name: str, ctx: VerifyContext) -> CheckResult:
    if name not in CHECKS:
        raise InvalidInputError(f"unknown check {name!r}; choose from {', '.join(VERIFY_CHECKS)}")
    started = time.perf_counter()
    try:
        detail = CHECKS[name](ctx)
        passed = True
    except CheckFailed as exc:
        detail, passed = str(exc), False
    elapsed = time.perf_counter() - started
    logger.debug("check %s: %s in %.2fs", name, 'pass' if passed else 'FAIL', elapsed)
    return CheckResult(name, passed, detail, elapsed)


def run_checks(
    names: Optional[Sequence[str]] = None,
    tolerance_scale: float = 1.0,
    samples: int = VERIFY_RANDOM_SAMPLES,
) -> List[CheckResult]:
    """Run the named checks (all of them by default) in their canonical order"""
    if tolerance_scale < 0:
        raise InvalidInputError(f"tolerance scale must be >= 0, got {tolerance_scale!r}")
    selected = list(names) if names else list(VERIFY_CHECKS)
    ctx = VerifyContext(tolerance_scale=tolerance_scale, samples=samples)
    ordered = [name for name in VERIFY_CHECKS if name in selected]
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise InvalidInputError(f"unknown checks {unknown}; choose from {', '.join(VERIFY_CHECKS)}")
    return [run_check(name, ctx) for name in ordered]

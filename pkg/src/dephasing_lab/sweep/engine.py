"""
Parameter sweeps over the scaled drive time gamma*T, the eraser angle theta
and the Werner weight r
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from ..dynamics import ChannelParams, DrivePulse, build_liouvillian, stationary_state
from ..eraser import (
    MeasurementBasis,
    average_concurrence,
    extract_coefficients,
    stationary_ghz_blocks,
)
from ..handlers.error_handler import InvalidInputError
from ..measures import concurrence_x, entropy_x
from ..states import ConditionalBlocks, parse_state, parse_two_qubit_state, werner_state
from ..utils.constants import (
    DEFAULT_GAMMA_T_MAX,
    DEFAULT_GAMMA_T_MIN,
    DEFAULT_GAMMA_T_POINTS,
    DEFAULT_THETA_POINTS,
    DEFAULT_WORKERS,
)

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

# CSV/JSON column order per sweep family
STATIONARY_COLUMNS = ('gamma_t', 'concurrence', 'entropy')
ERASER_COLUMNS = ('gamma_t', 'theta', 'c_ave')
MIXEDNESS_COLUMNS = ('r', 'gamma_t', 'concurrence', 'entropy')


def linear_grid(lo: float, hi: float, n: int) -> Tuple[float, ...]:
    """n evenly spaced points on [lo, hi]; a single point is just lo"""
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidInputError(f"grid bounds must be finite, got [{lo!r}, {hi!r}]")
    if n < 1:
        raise InvalidInputError(f"grid needs at least one point, got {n!r}")
    if n == 1:
        return (float(lo),)
    if not lo < hi:
        raise InvalidInputError(f"grid bounds must satisfy lo < hi, got [{lo!r}, {hi!r}]")
    return tuple(float(x) for x in np.linspace(lo, hi, n))


def default_gamma_t_grid() -> Tuple[float, ...]:
    return linear_grid(DEFAULT_GAMMA_T_MIN, DEFAULT_GAMMA_T_MAX, DEFAULT_GAMMA_T_POINTS)


def default_theta_grid() -> Tuple[float, ...]:
    return linear_grid(0.0, math.pi, DEFAULT_THETA_POINTS)


def _check_grid(name: str, grid: Sequence[float]) -> Tuple[float, ...]:
    values = tuple(float(x) for x in grid)
    if not values:
        raise InvalidInputError(f"{name} must not be empty")
    if not all(math.isfinite(x) for x in values):
        raise InvalidInputError(f"{name} contains non-finite values")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidInputError(f"{name} must be strictly ascending")
    return values


@dataclass(frozen=True)
class SweepSpec:
    omega_ratio: float
    gamma: float
    initial: str
    gamma_t_grid: Tuple[float, ...]
    theta_grid: Optional[Tuple[float, ...]] = None
    phi: float = 0.0
    workers: int = DEFAULT_WORKERS

    def __post_init__(self):
        if not (math.isfinite(self.omega_ratio) and self.omega_ratio >= 0):
            raise InvalidInputError(f"omega_ratio must be >= 0, got {self.omega_ratio!r}")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise InvalidInputError(f"gamma must be > 0, got {self.gamma!r}")
        grid = _check_grid('gamma_t_grid', self.gamma_t_grid)
        if grid[0] < 0:
            raise InvalidInputError("gamma_t_grid must be non-negative")
        object.__setattr__(self, 'gamma_t_grid', grid)
        if self.theta_grid is not None:
            thetas = _check_grid('theta_grid', self.theta_grid)
            if thetas[0] < 0 or thetas[-1] > math.pi:
                raise InvalidInputError("theta_grid must lie in [0, pi]")
            object.__setattr__(self, 'theta_grid', thetas)
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise InvalidInputError(f"phi={self.phi!r} outside [0, 2pi)")
        if int(self.workers) < 1:
            raise InvalidInputError(f"workers must be >= 1, got {self.workers!r}")

    @property
    def params(self) -> ChannelParams:
        return ChannelParams(self.gamma)

    @property
    def omega1(self) -> float:
        return self.omega_ratio * self.gamma

    def pulse(self, gamma_t: float) -> DrivePulse:
        return DrivePulse.from_scaled(self.omega_ratio, gamma_t, self.gamma)


@dataclass(frozen=True)
class SweepRecord:
    """One grid point; either (concurrence, entropy) or c_ave is populated"""

    gamma_t: float
    theta: Optional[float] = None
    concurrence: Optional[float] = None
    entropy: Optional[float] = None
    c_ave: Optional[float] = None
    r: Optional[float] = None

    def __post_init__(self):
        stationary = self.concurrence is not None and self.entropy is not None
        eraser = self.c_ave is not None
        if stationary == eraser:
            raise InvalidInputError("a record carries either concurrence+entropy or c_ave")
        if eraser and self.theta is None:
            raise InvalidInputError("eraser records need theta")

    @property
    def columns(self) -> Tuple[str, ...]:
        if self.c_ave is not None:
            return ERASER_COLUMNS
        if self.r is not None:
            return MIXEDNESS_COLUMNS
        return STATIONARY_COLUMNS

    def as_dict(self):
        return {name: getattr(self, name) for name in self.columns}


def _evaluate(fn: Callable[[T], R], points: Iterable[T], workers: int) -> List[R]:
    """Map over grid points, keeping grid order whether or not threads are used"""
    points = list(points)
    if workers <= 1 or len(points) <= 1:
        return [fn(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points))


def sweep_stationary(spec: SweepSpec) -> List[SweepRecord]:
    """(C_s, S) of the stationary state at every gamma*T of the grid"""
    rho0 = parse_two_qubit_state(spec.initial)
    params = spec.params
    liouvillian = build_liouvillian(spec.omega1, params)
    logger.debug(
        "stationary sweep: %s, omega/gamma=%g, %d points, %d workers",
        spec.initial, spec.omega_ratio, len(spec.gamma_t_grid), spec.workers,
    )

    def point(gamma_t: float) -> SweepRecord:
        x = stationary_state(rho0, spec.pulse(gamma_t), params, liouvillian=liouvillian)
        return SweepRecord(gamma_t=gamma_t, concurrence=concurrence_x(x), entropy=entropy_x(x))

    return _evaluate(point, spec.gamma_t_grid, spec.workers)


def sweep_eraser(spec: SweepSpec) -> List[SweepRecord]:
    """Average concurrence after measuring qubit 3, gamma*T outer and theta inner"""
    if not isinstance(parse_state(spec.initial), ConditionalBlocks):
        raise InvalidInputError(f"eraser sweep needs the ghz initial state, got {spec.initial!r}")
    if spec.theta_grid is None:
        raise InvalidInputError("eraser sweep needs a theta grid")
    params = spec.params
    liouvillian = build_liouvillian(spec.omega1, params)
    bases = [MeasurementBasis(theta, spec.phi) for theta in spec.theta_grid]
    logger.debug(
        "eraser sweep: omega/gamma=%g, %d x %d points",
        spec.omega_ratio, len(spec.gamma_t_grid), len(bases),
    )

    def row(gamma_t: float) -> List[SweepRecord]:
        # C_ave is read from the six validated amplitudes only
        zeta = extract_coefficients(stationary_ghz_blocks(spec.pulse(gamma_t), params, liouvillian))
        blocks = zeta.to_blocks()
        return [
            SweepRecord(gamma_t=gamma_t, theta=basis.theta, c_ave=average_concurrence(blocks, basis))
            for basis in bases
        ]

    rows = _evaluate(row, spec.gamma_t_grid, spec.workers)
    return [record for records in rows for record in records]


def sweep_mixedness(
    omega_ratio: float,
    gamma: float,
    gamma_t: float,
    r_grid: Sequence[float],
    workers: int = DEFAULT_WORKERS,
) -> List[SweepRecord]:
    """Stationary (C_s, S) of Werner states as the initial mixedness r varies at fixed drive"""
    grid = _check_grid('r_grid', r_grid)
    if grid[0] < 0 or grid[-1] > 1:
        raise InvalidInputError("r_grid must lie in [0, 1]")
    # range checks on omega_ratio, gamma and gamma_t
    spec = SweepSpec(omega_ratio, gamma, 'werner:1', (gamma_t,), workers=workers)
    params = spec.params
    liouvillian = build_liouvillian(spec.omega1, params)
    pulse = spec.pulse(gamma_t)

    def point(r: float) -> SweepRecord:
        x = stationary_state(werner_state(r), pulse, params, liouvillian=liouvillian)
        return SweepRecord(gamma_t=gamma_t, r=r, concurrence=concurrence_x(x), entropy=entropy_x(x))

    return _evaluate(point, grid, spec.workers)

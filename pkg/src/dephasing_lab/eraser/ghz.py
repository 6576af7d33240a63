"""
Remote control of two-qubit entanglement through a quantum eraser on qubit 3

Qubit 3 is decoherence-free, so the three-qubit state is evolved as four
qubit-3 conditional blocks, each carried by the same two-qubit propagator.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..handlers.error_handler import (
    ImpossibleOutcomeError,
    InvalidInputError,
    PatternViolationError,
)
from ..dynamics import (
    ChannelParams,
    DrivePulse,
    Liouvillian,
    Propagator,
    build_liouvillian,
    dephasing_fixed_point,
)
from ..linalg import unvec, vec
from ..measures import concurrence
from ..states import BASIS_LABELS, ConditionalBlocks, DensityMatrix, ghz_blocks
from ..utils.constants import (
    BASIS_ORTHONORMAL_TOL,
    GHZ_PATTERN_TOL,
    IMPOSSIBLE_OUTCOME_PROB,
    TRACE_TOL,
)

logger = logging.getLogger(__name__)

_IDX = {label: i for i, label in enumerate(BASIS_LABELS)}

# (block, row, col) positions of the six stationary amplitudes
ZETA_POSITIONS = {
    'zeta_a': ('hh', _IDX['11'], _IDX['11']),
    'zeta_b': ('vv', _IDX['10'], _IDX['10']),
    'zeta_c': ('hh', _IDX['01'], _IDX['01']),
    'zeta_d': ('vv', _IDX['00'], _IDX['00']),
    'zeta_f': ('hv', _IDX['01'], _IDX['10']),
    'zeta_f*': ('vh', _IDX['10'], _IDX['01']),
}


@dataclass(frozen=True)
class MeasurementBasis:
    """{cos(t/2)|H> + e^{ip} sin(t/2)|V>, cos(t/2)|V> - e^{-ip} sin(t/2)|H>}"""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidInputError(f"theta={self.theta!r} outside [0, pi]")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise InvalidInputError(f"phi={self.phi!r} outside [0, 2pi)")
        first, second = self.vectors()
        gram = np.array(
            [[np.vdot(first, first), np.vdot(first, second)],
             [np.vdot(second, first), np.vdot(second, second)]]
        )
        if np.max(np.abs(gram - np.eye(2))) > BASIS_ORTHONORMAL_TOL:
            raise InvalidInputError("measurement basis is not orthonormal")

    def vectors(self) -> Tuple[np.ndarray, np.ndarray]:
        """Both basis kets as (H, V) amplitudes"""
        c = math.cos(self.theta / 2.0)
        s = math.sin(self.theta / 2.0)
        first = np.array([c, np.exp(1j * self.phi) * s], dtype=complex)
        second = np.array([-np.exp(-1j * self.phi) * s, c], dtype=complex)
        return first, second


@dataclass(frozen=True)
class GhzStationaryCoefficients:
    zeta_a: float
    zeta_b: float
    zeta_c: float
    zeta_d: float
    zeta_f: complex

    def __post_init__(self):
        total = self.zeta_a + self.zeta_b + self.zeta_c + self.zeta_d
        if abs(total - 1.0) > TRACE_TOL:
            raise InvalidInputError(f"zeta populations sum to {total!r}, not 1")
        if min(self.zeta_a, self.zeta_b, self.zeta_c, self.zeta_d) < -TRACE_TOL:
            raise InvalidInputError("negative zeta population")
        # positivity couples zeta_f to populations in different qubit-3 sectors
        self.to_blocks().validate()

    def to_blocks(self) -> ConditionalBlocks:
        hh = np.zeros((4, 4), dtype=complex)
        vv = np.zeros((4, 4), dtype=complex)
        hv = np.zeros((4, 4), dtype=complex)
        hh[_IDX['11'], _IDX['11']] = self.zeta_a
        hh[_IDX['01'], _IDX['01']] = self.zeta_c
        vv[_IDX['10'], _IDX['10']] = self.zeta_b
        vv[_IDX['00'], _IDX['00']] = self.zeta_d
        hv[_IDX['01'], _IDX['10']] = self.zeta_f
        return ConditionalBlocks(hh, hv, hv.conj().T, vv)

    def as_dict(self) -> Dict[str, float]:
        return {
            'zeta_a': self.zeta_a,
            'zeta_b': self.zeta_b,
            'zeta_c': self.zeta_c,
            'zeta_d': self.zeta_d,
            'zeta_f_real': float(np.real(self.zeta_f)),
            'zeta_f_imag': float(np.imag(self.zeta_f)),
        }


def evolve_blocks(
    blocks: ConditionalBlocks,
    omega1: float,
    params: ChannelParams,
    t: float,
    liouvillian: Optional[Liouvillian] = None,
) -> ConditionalBlocks:
    """Carry every conditional block with the same two-qubit propagator exp(L t)"""
    if t < 0:
        raise InvalidInputError(f"propagation time must be >= 0, got {t!r}")
    if t == 0:
        return blocks
    generator = liouvillian if liouvillian is not None else build_liouvillian(omega1, params)
    step = Propagator(generator).matrix(t)
    return ConditionalBlocks(*(unvec(step @ vec(block), 4) for block in blocks.blocks()))


def stationary_ghz_blocks(
    pulse: DrivePulse,
    params: ChannelParams,
    liouvillian: Optional[Liouvillian] = None,
) -> ConditionalBlocks:
    """GHZ blocks after the drive, projected onto the dephasing fixed point"""
    driven = evolve_blocks(ghz_blocks(), pulse.omega1, params, pulse.duration_t, liouvillian)
    projected = [dephasing_fixed_point(DensityMatrix(b, validate=False)).mat for b in driven.blocks()]
    return ConditionalBlocks(*projected)


def extract_coefficients(blocks: ConditionalBlocks) -> GhzStationaryCoefficients:
    """Read the six stationary amplitudes, rejecting anything outside their positions"""
    by_name = {'hh': blocks.rho_hh, 'hv': blocks.rho_hv, 'vh': blocks.rho_vh, 'vv': blocks.rho_vv}

    allowed = {(block, row, col) for block, row, col in ZETA_POSITIONS.values()}
    for name, block in by_name.items():
        for row in range(4):
            for col in range(4):
                if (name, row, col) in allowed:
                    continue
                magnitude = float(abs(block[row, col]))
                if magnitude >= GHZ_PATTERN_TOL:
                    entry = (f"{BASIS_LABELS[row]}x{BASIS_LABELS[col]}", name)
                    raise PatternViolationError(
                        "stationary GHZ state leaves its block pattern", entry, magnitude, GHZ_PATTERN_TOL
                    )

    def real_at(key: str) -> float:
        block, row, col = ZETA_POSITIONS[key]
        return float(by_name[block][row, col].real)

    block, row, col = ZETA_POSITIONS['zeta_f']
    return GhzStationaryCoefficients(
        zeta_a=real_at('zeta_a'),
        zeta_b=real_at('zeta_b'),
        zeta_c=real_at('zeta_c'),
        zeta_d=real_at('zeta_d'),
        zeta_f=complex(by_name[block][row, col]),
    )


def stationary_blocks(
    pulse: DrivePulse,
    params: ChannelParams,
    liouvillian: Optional[Liouvillian] = None,
) -> GhzStationaryCoefficients:
    zeta = extract_coefficients(stationary_ghz_blocks(pulse, params, liouvillian))
    logger.debug("stationary zeta at omega1=%g T=%g: %s", pulse.omega1, pulse.duration_t, zeta)
    return zeta


def trace_out_qubit3(blocks: ConditionalBlocks) -> DensityMatrix:
    return DensityMatrix(blocks.rho_hh + blocks.rho_vv)


def _unnormalized_outcome(blocks: ConditionalBlocks, basis: MeasurementBasis, outcome: int) -> np.ndarray:
    if outcome not in (1, 2):
        raise InvalidInputError(f"outcome must be 1 or 2, got {outcome!r}")
    ket = basis.vectors()[outcome - 1]
    # <m|H> and <m|V>
    bra_h, bra_v = np.conj(ket)
    return (
        bra_h * ket[0] * blocks.rho_hh
        + bra_h * ket[1] * blocks.rho_hv
        + bra_v * ket[0] * blocks.rho_vh
        + bra_v * ket[1] * blocks.rho_vv
    )


def project_qubit3(
    blocks: ConditionalBlocks,
    basis: MeasurementBasis,
    outcome: int,
) -> Tuple[float, DensityMatrix]:
    """Probability and normalized two-qubit state after measuring qubit 3"""
    unnormalized = _unnormalized_outcome(blocks, basis, outcome)
    probability = float(np.trace(unnormalized).real)
    if probability < IMPOSSIBLE_OUTCOME_PROB:
        raise ImpossibleOutcomeError(outcome, probability)
    return probability, DensityMatrix(unnormalized / probability)


def measurement_outcomes(blocks: ConditionalBlocks, basis: MeasurementBasis) -> List[Dict[str, float]]:
    """Per-outcome probability and concurrence; impossible outcomes are reported with probability 0"""
    report = []
    for outcome in (1, 2):
        try:
            probability, rho = project_qubit3(blocks, basis, outcome)
        except ImpossibleOutcomeError as exc:
            report.append({'outcome': outcome, 'probability': exc.probability, 'concurrence': None})
            continue
        report.append({'outcome': outcome, 'probability': probability, 'concurrence': concurrence(rho)})
    return report


def average_concurrence(blocks: ConditionalBlocks, basis: MeasurementBasis) -> float:
    """sum_k p_k C(rho_k) over the two outcomes; impossible outcomes contribute nothing"""
    total = 0.0
    for entry in measurement_outcomes(blocks, basis):
        if entry['concurrence'] is not None:
            total += entry['probability'] * entry['concurrence']
    return total


def closed_form_average_concurrence(zeta: GhzStationaryCoefficients, theta: float) -> float:
    """2 |sin theta| max(0, |zeta_f| - sqrt(zeta_a zeta_d))"""
    gap = abs(zeta.zeta_f) - math.sqrt(max(zeta.zeta_a, 0.0) * max(zeta.zeta_d, 0.0))
    return 2.0 * abs(math.sin(theta)) * max(0.0, gap)

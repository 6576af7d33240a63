#!/usr/bin/env python3
"""
Test the GHZ quantum eraser: conditional-block evolution, the stationary
zeta pattern, projective measurement of qubit 3 and the average concurrence
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from dephasing_lab.dynamics import ChannelParams, DrivePulse, build_liouvillian
from dephasing_lab.eraser import (
    GhzStationaryCoefficients,
    MeasurementBasis,
    average_concurrence,
    closed_form_average_concurrence,
    evolve_blocks,
    extract_coefficients,
    measurement_outcomes,
    project_qubit3,
    stationary_blocks,
    stationary_ghz_blocks,
    trace_out_qubit3,
)
from dephasing_lab.handlers import (
    ImpossibleOutcomeError,
    InvalidDensityMatrixError,
    InvalidInputError,
    PatternViolationError,
)
from dephasing_lab.measures import concurrence
from dephasing_lab.states import BELL_VECTORS, ConditionalBlocks, ghz_blocks

OMEGA_RATIO = 41.25
PARAMS = ChannelParams(1.0)


def _pulse(gamma_t):
    return DrivePulse.from_scaled(OMEGA_RATIO, gamma_t, 1.0)


def test_measurement_basis():
    """Basis kets are orthonormal; angles outside their ranges are rejected"""
    for theta in (0.0, 0.4, math.pi / 2, math.pi):
        first, second = MeasurementBasis(theta, 1.3).vectors()
        assert abs(np.vdot(first, second)) < 1e-12
        assert np.vdot(first, first).real == pytest.approx(1.0)

    for theta, phi in ((-0.1, 0.0), (4.0, 0.0), (1.0, 2 * math.pi), (1.0, -0.5)):
        with pytest.raises(InvalidInputError):
            MeasurementBasis(theta, phi)
    print("✓ Measurement basis")


def test_evolve_blocks_undriven():
    """Without drive the |11>H-|00>V coherence decays as exp(-2 gamma t)"""
    blocks = ghz_blocks()
    assert evolve_blocks(blocks, 0.0, PARAMS, 0.0) is blocks
    with pytest.raises(InvalidInputError):
        evolve_blocks(blocks, 0.0, PARAMS, -1.0)

    evolved = evolve_blocks(blocks, 0.0, PARAMS, 1.0)
    assert evolved.rho_hv[0, 3] == pytest.approx(0.5 * math.exp(-2.0), abs=1e-12)
    assert evolved.rho_hh[0, 0] == pytest.approx(0.5, abs=1e-12)
    assert evolved.rho_vv[3, 3] == pytest.approx(0.5, abs=1e-12)
    print("✓ Undriven block evolution")


def test_evolve_blocks_preserves_state():
    """Driven evolution keeps unit total trace and a positive three-qubit state"""
    liouvillian = build_liouvillian(OMEGA_RATIO, PARAMS)
    for t in (0.05, 0.5, 2.0):
        evolved = evolve_blocks(ghz_blocks(), OMEGA_RATIO, PARAMS, t, liouvillian)
        assert evolved.total_trace() == pytest.approx(1.0, abs=1e-12)
        evolved.validate()
    print("✓ Evolved blocks remain a valid state")


def test_stationary_pattern_at_zero_duration():
    """gamma*T = 0 leaves zeta = (1/2, 0, 0, 1/2, 0)"""
    zeta = stationary_blocks(_pulse(0.0), PARAMS)
    assert (zeta.zeta_a, zeta.zeta_b, zeta.zeta_c, zeta.zeta_d) == pytest.approx(
        (0.5, 0.0, 0.0, 0.5), abs=1e-12
    )
    assert zeta.zeta_f == pytest.approx(0.0, abs=1e-12)
    print("✓ Stationary zeta at gamma*T = 0")


def test_stationary_pattern_with_drive():
    """Driven stationary blocks keep the six-entry pattern and unit trace"""
    liouvillian = build_liouvillian(OMEGA_RATIO, PARAMS)
    for gamma_t in (0.03, 0.4, 1.7):
        blocks = stationary_ghz_blocks(_pulse(gamma_t), PARAMS, liouvillian)
        zeta = extract_coefficients(blocks)
        total = zeta.zeta_a + zeta.zeta_b + zeta.zeta_c + zeta.zeta_d
        assert total == pytest.approx(1.0, abs=1e-10)
        assert abs(zeta.zeta_f) ** 2 <= zeta.zeta_b * zeta.zeta_c + 1e-12
        assert blocks.rho_vh[1, 2] == pytest.approx(np.conj(zeta.zeta_f), abs=1e-12)
    print("✓ Driven stationary blocks keep their pattern")


def test_extract_rejects_off_pattern():
    with pytest.raises(PatternViolationError) as exc_info:
        extract_coefficients(ghz_blocks())
    assert exc_info.value.entry == ('11x00', 'hv')
    print("✓ Off-pattern blocks rejected")


def test_zeta_coefficient_validation():
    zeta = GhzStationaryCoefficients(0.0, 0.5, 0.5, 0.0, 0.5)
    assert zeta.as_dict()['zeta_f_real'] == pytest.approx(0.5)
    with pytest.raises(InvalidDensityMatrixError):
        GhzStationaryCoefficients(0.0, 0.5, 0.5, 0.0, 0.6)
    with pytest.raises(InvalidInputError):
        GhzStationaryCoefficients(0.5, 0.5, 0.5, 0.0, 0.0)
    print("✓ Zeta validation")


def test_projection_of_pure_ghz():
    """Measuring qubit 3 of the GHZ state at theta = pi/2 leaves a Psi Bell state"""
    basis = MeasurementBasis(math.pi / 2)
    expected = {1: BELL_VECTORS['psi+'], 2: BELL_VECTORS['psi-']}
    for outcome, vector in expected.items():
        probability, rho = project_qubit3(ghz_blocks(), basis, outcome)
        assert probability == pytest.approx(0.5)
        assert np.allclose(rho.mat, np.outer(vector, np.conj(vector)), atol=1e-12)
        assert concurrence(rho) == pytest.approx(1.0, abs=1e-9)

    with pytest.raises(InvalidInputError):
        project_qubit3(ghz_blocks(), basis, 3)
    print("✓ GHZ projection gives Bell states")


def test_impossible_outcome():
    """A zero-probability outcome raises and contributes nothing to the average"""
    hh = np.diag([1.0, 0.0, 0.0, 0.0])
    zero = np.zeros((4, 4))
    blocks = ConditionalBlocks(hh, zero, zero, zero)
    basis = MeasurementBasis(0.0)

    with pytest.raises(ImpossibleOutcomeError) as exc_info:
        project_qubit3(blocks, basis, 2)
    assert exc_info.value.probability == pytest.approx(0.0)

    report = measurement_outcomes(blocks, basis)
    assert report[1]['concurrence'] is None
    assert report[0]['probability'] == pytest.approx(1.0)
    assert average_concurrence(blocks, basis) == 0.0
    print("✓ Impossible outcome handled")


def test_closed_form_examples():
    zeta = GhzStationaryCoefficients(0.0, 0.5, 0.5, 0.0, 0.5)
    assert closed_form_average_concurrence(zeta, math.pi / 2) == pytest.approx(1.0)
    assert closed_form_average_concurrence(zeta, 0.0) == 0.0
    assert average_concurrence(zeta.to_blocks(), MeasurementBasis(math.pi / 2)) == pytest.approx(
        1.0, abs=1e-9
    )

    separable = GhzStationaryCoefficients(0.5, 0.0, 0.0, 0.5, 0.0)
    assert closed_form_average_concurrence(separable, math.pi / 2) == 0.0
    print("✓ Closed-form examples")


def test_brute_force_matches_closed_form():
    """Projective average agrees with 2|sin theta| max(0, |zeta_f| - sqrt(zeta_a zeta_d))"""
    liouvillian = build_liouvillian(OMEGA_RATIO, PARAMS)
    worst = 0.0
    for gamma_t in (0.08, 0.6, 1.5):
        blocks = stationary_ghz_blocks(_pulse(gamma_t), PARAMS, liouvillian)
        zeta = extract_coefficients(blocks)
        for theta in np.linspace(0.0, math.pi, 7):
            expected = closed_form_average_concurrence(zeta, theta)
            for phi in (0.0, 1.0, 4.0):
                value = average_concurrence(blocks, MeasurementBasis(float(theta), phi))
                worst = max(worst, abs(value - expected))
    assert worst < 1e-9
    print(f"✓ Brute force matches closed form, max gap {worst:.1e}")


def test_outcomes_are_symmetric_at_quarter_turn():
    """At theta = pi/2 both outcomes are equally likely and equally entangled"""
    blocks = stationary_ghz_blocks(_pulse(0.3), PARAMS)
    first, second = measurement_outcomes(blocks, MeasurementBasis(math.pi / 2, 0.7))
    assert first['probability'] == pytest.approx(0.5, abs=1e-10)
    assert first['probability'] + second['probability'] == pytest.approx(1.0, abs=1e-12)
    assert first['concurrence'] == pytest.approx(second['concurrence'], abs=1e-9)
    print("✓ Symmetric outcomes at theta = pi/2")


def test_remote_control():
    """Qubits 1 and 2 alone are separable, yet measuring qubit 3 entangles them"""
    liouvillian = build_liouvillian(OMEGA_RATIO, PARAMS)
    basis = MeasurementBasis(math.pi / 2)
    best = 0.0
    for gamma_t in np.linspace(0.0, 0.5, 26):
        blocks = stationary_ghz_blocks(_pulse(float(gamma_t)), PARAMS, liouvillian)
        assert concurrence(trace_out_qubit3(blocks)) == pytest.approx(0.0, abs=1e-9)
        best = max(best, average_concurrence(blocks, basis))
    assert best > 0.1
    print(f"✓ Traced-out state separable; best C_ave {best:.3f}")


def main():
    """Run all eraser tests"""
    print("=" * 50)
    print("Quantum Eraser Tests")
    print("=" * 50)

    tests = [
        ("Measurement basis", test_measurement_basis),
        ("Undriven blocks", test_evolve_blocks_undriven),
        ("State preservation", test_evolve_blocks_preserves_state),
        ("Zeta at zero duration", test_stationary_pattern_at_zero_duration),
        ("Zeta with drive", test_stationary_pattern_with_drive),
        ("Pattern violation", test_extract_rejects_off_pattern),
        ("Zeta validation", test_zeta_coefficient_validation),
        ("GHZ projection", test_projection_of_pure_ghz),
        ("Impossible outcome", test_impossible_outcome),
        ("Closed-form examples", test_closed_form_examples),
        ("Brute force vs closed form", test_brute_force_matches_closed_form),
        ("Outcome symmetry", test_outcomes_are_symmetric_at_quarter_turn),
        ("Remote control", test_remote_control),
    ]

    all_passed = True
    for test_name, test_func in tests:
        print(f"\n### {test_name} ###")
        try:
            test_func()
        except Exception as e:
            all_passed = False
            print(f"❌ {test_name} failed: {e!r}")

    print("\n" + "=" * 50)
    if all_passed:
        print("✅ All eraser tests passed!")
        return 0
    print("❌ Some eraser tests failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())

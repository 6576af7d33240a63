#!/usr/bin/env python3
"""
Test the driven collective-dephasing generator, exact propagation, the RK4
oracle and the stationary state after a finite drive
"""

import math
import sys
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from dephasing_lab.dynamics import (
    ChannelParams,
    DrivePulse,
    Propagator,
    build_liouvillian,
    checked_density,
    closed_form_dephasing,
    dephasing_fixed_point,
    drive_hamiltonian,
    evolve_trajectory,
    jz_operator,
    propagate,
    propagation,
    propagate_rk4,
    stationary_residual,
    stationary_state,
)
from dephasing_lab.handlers import InvalidInputError, NumericalFailureError
from dephasing_lab.states import XStateCoefficients, bell_state, random_density, werner_state
from dephasing_lab.utils.constants import STATIONARY_RESIDUAL_TOL, TRACE_TOL

OMEGA_RATIO = 41.25
PARAMS = ChannelParams(1.0)


def test_operators():
    assert np.allclose(jz_operator(), np.diag([1, 0, 0, -1]))
    h = drive_hamiltonian(2.0)
    assert np.allclose(h, h.conj().T)
    # flips qubit 1 only: |11> <-> |01>
    assert h[0, 2] == pytest.approx(1.0)
    assert h[0, 1] == 0
    print("✓ Jz and drive Hamiltonian")


def test_parameter_validation():
    with pytest.raises(InvalidInputError):
        ChannelParams(0.0)
    with pytest.raises(InvalidInputError):
        ChannelParams(float('nan'))
    with pytest.raises(InvalidInputError):
        DrivePulse(-1.0, 1.0)
    with pytest.raises(InvalidInputError):
        DrivePulse(1.0, -0.5)

    pulse = DrivePulse.from_scaled(OMEGA_RATIO, 0.5, 2.0)
    assert pulse.omega1 == pytest.approx(82.5)
    assert pulse.duration_t == pytest.approx(0.25)
    print("✓ Channel and pulse validation")


def test_liouvillian_is_trace_preserving():
    for omega1 in (0.0, 1.0, OMEGA_RATIO):
        assert build_liouvillian(omega1, PARAMS).trace_residual() < 1e-12
    print("✓ vec(I)^T L = 0")


def test_liouvillian_matches_master_equation():
    """The superoperator reproduces the commutator and dephasing terms entry by entry"""
    rng = np.random.default_rng(21)
    rho = random_density(rng).mat
    omega1, gamma = 3.0, 0.7
    h = drive_hamiltonian(omega1)
    jz = jz_operator()
    expected = -1j * (h @ rho - rho @ h) + 0.5 * gamma * (
        2 * jz @ rho @ jz - jz @ jz @ rho - rho @ jz @ jz
    )
    generator = build_liouvillian(omega1, ChannelParams(gamma))
    assert np.allclose(generator.apply(rho), expected, atol=1e-12)
    print("✓ Superoperator matches the master equation")


def test_propagate_edge_cases():
    rho = bell_state('phi-')
    assert propagate(rho, OMEGA_RATIO, PARAMS, 0.0) is rho
    with pytest.raises(InvalidInputError):
        propagate(rho, OMEGA_RATIO, PARAMS, -1.0)
    with pytest.raises(InvalidInputError):
        Propagator(build_liouvillian(0.0, PARAMS)).matrix(-0.1)
    print("✓ Propagation edge cases")


def test_undriven_matches_closed_form():
    """With no drive every coherence decays as exp(-gamma (m - n)^2 t / 2)"""
    rng = np.random.default_rng(22)
    for _ in range(5):
        rho = random_density(rng)
        exact = propagate(rho, 0.0, PARAMS, 0.7).mat
        assert np.allclose(exact, closed_form_dephasing(rho, 1.0, 0.7), atol=1e-10)
    print("✓ Undriven propagation matches the closed form")


def test_bell_dichotomy():
    """Phi states are decoherence-free; the Psi coherence decays as exp(-2 gamma t)"""
    for kind in ('phi+', 'phi-'):
        rho = bell_state(kind)
        assert np.allclose(propagate(rho, 0.0, PARAMS, 5.0).mat, rho.mat, atol=1e-12)
    evolved = propagate(bell_state('psi+'), 0.0, PARAMS, 1.0)
    assert evolved.entry('11', '00') == pytest.approx(0.5 * math.exp(-2.0), abs=1e-12)
    assert evolved.entry('11', '11') == pytest.approx(0.5, abs=1e-12)
    print("✓ Phi invariant, Psi coherence decays")


def test_rk4_agrees_with_exponential():
    rng = np.random.default_rng(23)
    omega1 = OMEGA_RATIO
    for _ in range(3):
        rho = random_density(rng)
        exact = propagate(rho, omega1, PARAMS, 0.1).mat
        stepped = propagate_rk4(rho, omega1, PARAMS, 0.1, step=1e-3).mat
        assert np.max(np.abs(exact - stepped)) < 1e-6
    print("✓ RK4 oracle agrees with expm")


def test_rk4_is_fourth_order():
    """Halving the step cuts the RK4 error about sixteenfold"""
    rho = random_density(np.random.default_rng(26))
    exact = propagate(rho, OMEGA_RATIO, PARAMS, 0.2).mat
    errors = [
        float(np.max(np.abs(propagate_rk4(rho, OMEGA_RATIO, PARAMS, 0.2, step=h).mat - exact)))
        for h in (0.004, 0.002)
    ]
    assert 12.0 < errors[0] / errors[1] < 20.0
    print(f"✓ RK4 error ratio {errors[0] / errors[1]:.2f}")


def test_liouvillian_preserves_hermiticity():
    """L(X^dagger) = L(X)^dagger for any operator X"""
    rng = np.random.default_rng(27)
    for omega1 in (0.0, OMEGA_RATIO):
        generator = build_liouvillian(omega1, ChannelParams(0.7))
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert np.max(np.abs(generator.apply(x.conj().T) - generator.apply(x).conj().T)) < 1e-11
    print("✓ Generator commutes with the adjoint")


def test_stationary_state_scaling_invariance():
    """(s Omega1, s gamma, T / s) leaves the stationary state unchanged"""
    rng = np.random.default_rng(28)
    for rho0 in (bell_state('phi-'), werner_state(0.8), random_density(rng)):
        for gamma_t in (0.1, 0.7, 1.9):
            reference = stationary_state(rho0, DrivePulse(OMEGA_RATIO, gamma_t), PARAMS)
            for s in (0.5, 3.0, 17.0):
                scaled = stationary_state(rho0, DrivePulse(OMEGA_RATIO * s, gamma_t / s), ChannelParams(s))
                assert (scaled.a, scaled.b, scaled.c, scaled.d) == pytest.approx(
                    (reference.a, reference.b, reference.c, reference.d), abs=1e-10
                )
                assert abs(scaled.f - reference.f) < 1e-10
    print("✓ Stationary state depends only on (Omega1/gamma, gamma*T)")


def test_rk4_rejects_coarse_steps():
    with pytest.raises(InvalidInputError):
        propagate_rk4(bell_state('phi-'), OMEGA_RATIO, PARAMS, 1.0, step=0.01)
    with pytest.raises(InvalidInputError):
        propagate_rk4(bell_state('phi-'), 0.0, PARAMS, 1.0, step=0.1)
    with pytest.raises(InvalidInputError):
        propagate_rk4(bell_state('phi-'), 0.0, PARAMS, 1.0, step=0.0)
    print("✓ RK4 step limits enforced")


def test_checked_density_detects_drift():
    with pytest.raises(NumericalFailureError):
        checked_density(np.eye(4, dtype=complex) / 2, "test")
    with pytest.raises(NumericalFailureError):
        checked_density(np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex), "test")
    print("✓ Drift off the state space detected")


def test_fixed_point_is_stationary():
    """The dephasing fixed point is annihilated by the undriven generator"""
    rng = np.random.default_rng(24)
    for _ in range(5):
        driven = propagate(random_density(rng), OMEGA_RATIO, PARAMS, 0.3)
        fixed = dephasing_fixed_point(driven)
        assert stationary_residual(fixed, PARAMS) < STATIONARY_RESIDUAL_TOL
        assert fixed.mat[0, 3] == 0
        assert fixed.mat[1, 2] == driven.mat[1, 2]
    print("✓ Fixed point is stationary")


def test_fixed_point_is_idempotent():
    rng = np.random.default_rng(25)
    for _ in range(5):
        once = dephasing_fixed_point(random_density(rng))
        assert np.array_equal(dephasing_fixed_point(once).mat, once.mat)
    print("✓ Projecting twice changes nothing")


def test_fixed_point_is_long_time_limit():
    """Free evolution for a long time converges to the fixed point"""
    rho = propagate(bell_state('psi+'), OMEGA_RATIO, PARAMS, 0.2)
    late = propagate(rho, 0.0, PARAMS, 80.0)
    assert np.allclose(late.mat, dephasing_fixed_point(rho).mat, atol=1e-12)
    print("✓ Fixed point is the long-time limit")


def test_stationary_state_values():
    """At gamma*T = 0 the stationary state keeps the initial X-state part"""
    pulse = DrivePulse.from_scaled(OMEGA_RATIO, 0.0, 1.0)
    x = stationary_state(bell_state('phi-'), pulse, PARAMS)
    assert isinstance(x, XStateCoefficients)
    assert (x.a, x.b, x.c, x.d) == pytest.approx((0.0, 0.5, 0.5, 0.0), abs=1e-12)
    assert x.f == pytest.approx(-0.5)

    x = stationary_state(werner_state(0.8), pulse, PARAMS)
    assert x.a == pytest.approx(0.05)
    assert x.f == pytest.approx(-0.4)

    x = stationary_state(bell_state('psi+'), pulse, PARAMS)
    assert x.f == pytest.approx(0.0)
    print("✓ Stationary states at gamma*T = 0")


def test_stationary_state_with_drive():
    """A driven stationary state stays a valid X-state"""
    for gamma_t in (0.05, 0.5, 1.3):
        pulse = DrivePulse.from_scaled(OMEGA_RATIO, gamma_t, 1.0)
        x = stationary_state(bell_state('phi-'), pulse, PARAMS)
        assert x.a + x.b + x.c + x.d == pytest.approx(1.0, abs=TRACE_TOL)
        assert abs(x.f) ** 2 <= x.b * x.c + 1e-12
    print("✓ Driven stationary states are valid")


def test_stationary_state_checks_residual():
    """A fixed point the undriven generator does not annihilate is a numerical failure"""
    pulse = DrivePulse.from_scaled(OMEGA_RATIO, 0.3, 1.0)
    with patch.object(propagation, 'stationary_residual', return_value=10 * STATIONARY_RESIDUAL_TOL):
        with pytest.raises(NumericalFailureError):
            stationary_state(bell_state('phi-'), pulse, PARAMS)
    print("✓ Residual guard on the stationary state")


def test_evolve_trajectory():
    rho0 = bell_state('psi+')
    pulse = DrivePulse(0.0, 0.5)
    times = (0.0, 0.5, 1.5)
    states = evolve_trajectory(rho0, pulse, PARAMS, times)
    assert len(states) == 3
    assert states[0] is rho0
    for t, state in zip(times, states):
        assert np.allclose(state.mat, closed_form_dephasing(rho0, 1.0, t), atol=1e-10)

    driven = evolve_trajectory(rho0, DrivePulse(OMEGA_RATIO, 0.2), PARAMS, (0.2, 0.7))
    after = propagate(driven[0], 0.0, PARAMS, 0.5)
    assert np.allclose(driven[1].mat, after.mat, atol=1e-12)

    with pytest.raises(InvalidInputError):
        evolve_trajectory(rho0, pulse, PARAMS, (-1.0,))
    print("✓ Trajectories switch off the drive at T")


def main():
    """Run all dynamics tests"""
    print("=" * 50)
    print("Dynamics Tests")
    print("=" * 50)

    tests = [
        ("Operators", test_operators),
        ("Parameter validation", test_parameter_validation),
        ("Trace preservation", test_liouvillian_is_trace_preserving),
        ("Master equation", test_liouvillian_matches_master_equation),
        ("Propagation edge cases", test_propagate_edge_cases),
        ("Undriven closed form", test_undriven_matches_closed_form),
        ("Bell dichotomy", test_bell_dichotomy),
        ("RK4 oracle", test_rk4_agrees_with_exponential),
        ("RK4 order", test_rk4_is_fourth_order),
        ("Hermiticity preservation", test_liouvillian_preserves_hermiticity),
        ("Scaling invariance", test_stationary_state_scaling_invariance),
        ("RK4 step limits", test_rk4_rejects_coarse_steps),
        ("Drift detection", test_checked_density_detects_drift),
        ("Fixed point", test_fixed_point_is_stationary),
        ("Fixed point idempotence", test_fixed_point_is_idempotent),
        ("Long-time limit", test_fixed_point_is_long_time_limit),
        ("Stationary values", test_stationary_state_values),
        ("Driven stationary states", test_stationary_state_with_drive),
        ("Residual guard", test_stationary_state_checks_residual),
        ("Trajectories", test_evolve_trajectory),
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
        print("✅ All dynamics tests passed!")
        return 0
    print("❌ Some dynamics tests failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())

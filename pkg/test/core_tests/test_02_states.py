#!/usr/bin/env python3
"""
Test state containers and constructors: Bell and Werner states, X-state
extraction, the GHZ conditional blocks and descriptor parsing
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from dephasing_lab.handlers import (
    InvalidDensityMatrixError,
    InvalidInputError,
    PatternViolationError,
)
from dephasing_lab.states import (
    BELL_VECTORS,
    ConditionalBlocks,
    DensityMatrix,
    XStateCoefficients,
    as_x_state,
    bell_state,
    ghz_blocks,
    parse_state,
    parse_two_qubit_state,
    pure_state,
    random_density,
    random_x_state,
    validate_density,
    werner_state,
)


def test_bell_states():
    """Bell states are pure, unit-trace, and sit on the expected entries"""
    for kind, vector in BELL_VECTORS.items():
        rho = bell_state(kind)
        assert rho.trace == pytest.approx(1.0)
        assert np.allclose(rho.mat @ rho.mat, rho.mat, atol=1e-12)
        assert np.isclose(np.linalg.norm(vector), 1.0)

    psi_plus = bell_state('psi+')
    assert psi_plus.entry('11', '00') == pytest.approx(0.5)
    phi_minus = bell_state('PHI-')
    assert phi_minus.entry('10', '01') == pytest.approx(-0.5)

    with pytest.raises(InvalidInputError):
        bell_state('chi+')
    print("✓ Bell states constructed")


def test_pure_state_normalizes():
    rho = pure_state([2, 0, 0, 0])
    assert rho.entry('11', '11') == pytest.approx(1.0)
    with pytest.raises(InvalidInputError):
        pure_state([0, 0, 0, 0])
    print("✓ Pure states normalized")


def test_werner_state():
    """0.8|Phi-><Phi-| + 0.05 I has eigenvalues 0.85 and 0.05 (x3)"""
    rho = werner_state(0.8)
    eigenvalues = np.sort(np.linalg.eigvalsh(rho.mat))
    assert np.allclose(eigenvalues, [0.05, 0.05, 0.05, 0.85], atol=1e-12)

    x = as_x_state(rho)
    assert (x.a, x.b, x.c, x.d) == pytest.approx((0.05, 0.45, 0.45, 0.05))
    assert x.f == pytest.approx(-0.4)

    for bad in (-0.1, 1.5):
        with pytest.raises(InvalidInputError):
            werner_state(bad)
    print("✓ Werner state and its X-state coefficients")


def test_as_x_state_rejects_off_pattern():
    """|11><00| coherence is outside the stationary X-state pattern"""
    with pytest.raises(PatternViolationError) as exc_info:
        as_x_state(bell_state('psi+'))
    assert exc_info.value.entry in {('11', '00'), ('00', '11')}
    assert exc_info.value.magnitude == pytest.approx(0.5)
    print("✓ Pattern violation reported with the offending entry")


def test_x_state_coefficients():
    """to_matrix places f at (|10>, |01>) and the constructor checks positivity"""
    x = XStateCoefficients(0.1, 0.4, 0.3, 0.2, 0.1 + 0.2j)
    mat = x.to_matrix()
    assert mat[1, 2] == pytest.approx(0.1 + 0.2j)
    assert mat[2, 1] == pytest.approx(0.1 - 0.2j)
    assert x.to_density().trace == pytest.approx(1.0)
    assert x.as_dict()['f_imag'] == pytest.approx(0.2)

    with pytest.raises(InvalidInputError):
        XStateCoefficients(0.1, 0.4, 0.3, 0.2, 0.5)
    with pytest.raises(InvalidInputError):
        XStateCoefficients(0.5, 0.5, 0.5, 0.0, 0.0)
    with pytest.raises(InvalidInputError):
        XStateCoefficients(-0.1, 0.6, 0.3, 0.2, 0.0)
    print("✓ X-state coefficient validation")


def test_validate_density_reports_without_raising():
    mat = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
    mat[0, 1] = 0.5
    diagnostics = validate_density(mat)
    assert not diagnostics.passed
    assert diagnostics.hermiticity_deviation == pytest.approx(0.5)

    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(2 * np.eye(4) / 4)
    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(np.diag([1.5, -0.5, 0.0, 0.0]))
    with pytest.raises(InvalidInputError):
        DensityMatrix(np.eye(2) / 2)
    print("✓ Density validation diagnostics")


def test_density_matrix_is_read_only():
    rho = bell_state('phi+')
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1.0
    print("✓ Density matrices are immutable")


def test_ghz_blocks():
    """(|11>|H> + |00>|V>)/sqrt2 assembles into the expected 8x8 state"""
    blocks = ghz_blocks()
    full = blocks.assemble()
    assert full.shape == (8, 8)
    assert full[0, 0] == pytest.approx(0.5)
    assert full[7, 7] == pytest.approx(0.5)
    assert full[0, 7] == pytest.approx(0.5)
    assert blocks.total_trace() == pytest.approx(1.0)
    assert blocks.validate() is blocks
    print("✓ GHZ blocks assemble and validate")


def test_conditional_blocks_validation():
    """Broken adjoint relations and negative states are rejected"""
    hh, hv, vh, vv = ghz_blocks().blocks()
    with pytest.raises(InvalidDensityMatrixError):
        ConditionalBlocks(hh, hv, 2 * vh, vv).validate()

    too_coherent = np.array(hv)
    too_coherent[0, 3] = 0.9
    with pytest.raises(InvalidDensityMatrixError):
        ConditionalBlocks(hh, too_coherent, too_coherent.conj().T, vv).validate()

    with pytest.raises(InvalidInputError):
        ConditionalBlocks(np.eye(2), hv, vh, vv)
    print("✓ Conditional block validation")


def test_parse_state():
    assert isinstance(parse_state('phi-'), DensityMatrix)
    assert isinstance(parse_state(' GHZ '), ConditionalBlocks)
    werner = parse_state('werner:0.8')
    assert np.allclose(werner.mat, werner_state(0.8).mat)

    for bad in ('werner:abc', 'werner:2', 'bell', ''):
        with pytest.raises(InvalidInputError):
            parse_state(bad)
    with pytest.raises(InvalidInputError):
        parse_two_qubit_state('ghz')
    print("✓ State descriptors parsed")


def test_random_generators():
    """Random densities and X-states are valid and reproducible from the seed"""
    rng = np.random.default_rng(7)
    for rank in (1, 2, 4):
        rho = random_density(rng, rank=rank)
        assert validate_density(rho).passed
        assert np.linalg.matrix_rank(rho.mat, tol=1e-10) == rank

    xs = [random_x_state(np.random.default_rng(11)) for _ in range(2)]
    assert xs[0] == xs[1]
    assert abs(xs[0].f) ** 2 <= xs[0].b * xs[0].c
    assert math.isclose(xs[0].a + xs[0].b + xs[0].c + xs[0].d, 1.0)
    print("✓ Random generators")


def main():
    """Run all state tests"""
    print("=" * 50)
    print("State Tests")
    print("=" * 50)

    tests = [
        ("Bell states", test_bell_states),
        ("Pure states", test_pure_state_normalizes),
        ("Werner state", test_werner_state),
        ("X-state pattern", test_as_x_state_rejects_off_pattern),
        ("X-state coefficients", test_x_state_coefficients),
        ("Density validation", test_validate_density_reports_without_raising),
        ("Immutability", test_density_matrix_is_read_only),
        ("GHZ blocks", test_ghz_blocks),
        ("Block validation", test_conditional_blocks_validation),
        ("Descriptor parsing", test_parse_state),
        ("Random generators", test_random_generators),
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
        print("✅ All state tests passed!")
        return 0
    print("❌ Some state tests failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())

"""
Eraser Tools - Remote control of two-qubit entanglement by measuring qubit 3
"""

import math
from typing import Any, Dict

from ..utils.constants import (
    DEFAULT_GAMMA,
    DEFAULT_GAMMA_T_MAX,
    DEFAULT_GAMMA_T_MIN,
    DEFAULT_OMEGA_RATIO,
    DEFAULT_THETA_POINTS,
    DEFAULT_WORKERS,
    SUCCESS_MESSAGES,
)


def register(mcp):
    """Register quantum eraser tools with the MCP server"""

    @mcp.tool()
    def dephasing_eraser_point(
        gamma_t: float,
        theta: float = math.pi / 2,
        phi: float = 0.0,
        omega_ratio: float = DEFAULT_OMEGA_RATIO,
        gamma: float = DEFAULT_GAMMA
    ) -> Dict[str, Any]:
        """
        Stationary GHZ amplitudes and the eraser outcome at one (gamma*T, theta, phi).

        USAGE: theta=pi/2 gives the largest average concurrence for a given pulse.

        Args:
            gamma_t: Scaled drive duration gamma*T
            theta: Measurement basis angle in [0, pi]
            phi: Measurement basis phase in [0, 2pi)
            omega_ratio: Drive strength Omega1/gamma
            gamma: Collective dephasing rate

        Returns:
            zeta amplitudes, per-outcome probability and concurrence, average concurrence
            (brute force and closed form) and the concurrence with qubit 3 traced out
        """
        from ..dynamics import ChannelParams, DrivePulse
        from ..eraser import (
            MeasurementBasis,
            average_concurrence,
            closed_form_average_concurrence,
            extract_coefficients,
            measurement_outcomes,
            stationary_ghz_blocks,
            trace_out_qubit3,
        )
        from ..handlers import ResponseFormatter
        from ..measures import concurrence

        formatter = ResponseFormatter()
        try:
            basis = MeasurementBasis(theta, phi)
            blocks = stationary_ghz_blocks(DrivePulse.from_scaled(omega_ratio, gamma_t, gamma), ChannelParams(gamma))
            zeta = extract_coefficients(blocks)
            response = {
                'status': 'success',
                'zeta': zeta.as_dict(),
                'outcomes': measurement_outcomes(blocks, basis),
                'c_ave': average_concurrence(blocks, basis),
                'c_ave_closed_form': closed_form_average_concurrence(zeta, theta),
                'traced_out_concurrence': concurrence(trace_out_qubit3(blocks))
            }
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)
        return response

    @mcp.tool()
    def dephasing_eraser_sweep(
        omega_ratio: float = DEFAULT_OMEGA_RATIO,
        gamma_t_min: float = DEFAULT_GAMMA_T_MIN,
        gamma_t_max: float = DEFAULT_GAMMA_T_MAX,
        points: int = 101,
        theta_points: int = DEFAULT_THETA_POINTS,
        phi: float = 0.0,
        gamma: float = DEFAULT_GAMMA,
        workers: int = DEFAULT_WORKERS,
        include_records: bool = False
    ) -> Dict[str, Any]:
        """
        Average concurrence over a (gamma*T, theta) grid, gamma*T outer and theta inner.

        Args:
            omega_ratio: Drive strength Omega1/gamma
            gamma_t_min: First gamma*T
            gamma_t_max: Last gamma*T
            points: Number of gamma*T points
            theta_points: Number of theta points on [0, pi]
            phi: Measurement basis phase
            gamma: Collective dephasing rate
            workers: Threads used for gamma*T rows
            include_records: Return every record, not only the summary

        Returns:
            Summary with the best operating point
        """
        from ..handlers import ResponseFormatter
        from ..sweep import SweepSpec, linear_grid, sweep_eraser

        formatter = ResponseFormatter()
        try:
            spec = SweepSpec(
                omega_ratio=omega_ratio,
                gamma=gamma,
                initial="ghz",
                gamma_t_grid=linear_grid(gamma_t_min, gamma_t_max, points),
                theta_grid=linear_grid(0.0, math.pi, theta_points),
                phi=phi,
                workers=workers
            )
            records = sweep_eraser(spec)
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)

        rows = [r.as_dict() for r in records]
        best = max(rows, key=lambda row: row['c_ave'])
        response = {
            'status': 'success',
            'message': SUCCESS_MESSAGES['sweep'],
            'summary': formatter.summarize_records(rows),
            'best': best
        }
        if include_records:
            response['records'] = rows
        return response

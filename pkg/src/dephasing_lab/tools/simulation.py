"""
Simulation Tools - Stationary states, trajectories and gamma*T sweeps of the driven two-qubit system
"""

from typing import Any, Dict, List, Optional

from ..utils.constants import (
    DEFAULT_EXTREMA_WINDOW,
    DEFAULT_GAMMA,
    DEFAULT_GAMMA_T_MAX,
    DEFAULT_GAMMA_T_MIN,
    DEFAULT_GAMMA_T_POINTS,
    DEFAULT_OMEGA_RATIO,
    DEFAULT_WORKERS,
    SUCCESS_MESSAGES,
)


def register(mcp):
    """Register simulation tools with the MCP server"""

    @mcp.tool()
    def dephasing_stationary_state(
        state: str = "phi-",
        omega_ratio: float = DEFAULT_OMEGA_RATIO,
        gamma_t: float = 0.0,
        gamma: float = DEFAULT_GAMMA
    ) -> Dict[str, Any]:
        """
        Stationary X-state left behind by a drive of duration gamma*T.

        USAGE: Start here to see how a single pulse shapes the final entanglement.

        Args:
            state: Initial two-qubit state ("phi+", "phi-", "psi+", "psi-", "werner:<r>")
            omega_ratio: Drive strength Omega1/gamma
            gamma_t: Scaled drive duration gamma*T
            gamma: Collective dephasing rate

        Returns:
            X-state coefficients with the stationary concurrence and entropy
        """
        from ..dynamics import ChannelParams, DrivePulse, stationary_state
        from ..handlers import ResponseFormatter
        from ..measures import concurrence_x, entropy_x
        from ..states import parse_two_qubit_state

        formatter = ResponseFormatter()
        try:
            rho0 = parse_two_qubit_state(state)
            pulse = DrivePulse.from_scaled(omega_ratio, gamma_t, gamma)
            x = stationary_state(rho0, pulse, ChannelParams(gamma))
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)

        return {
            'status': 'success',
            'message': SUCCESS_MESSAGES['stationary'],
            'coefficients': x.as_dict(),
            'concurrence': concurrence_x(x),
            'entropy': entropy_x(x)
        }

    @mcp.tool()
    def dephasing_evolve(
        times: List[float],
        state: str = "phi-",
        omega_ratio: float = DEFAULT_OMEGA_RATIO,
        gamma_t: float = 0.0,
        gamma: float = DEFAULT_GAMMA
    ) -> Dict[str, Any]:
        """
        Concurrence and entropy along a trajectory: drive on up to T, free dephasing afterwards.

        USAGE: Use with omega_ratio=0 to watch Phi states survive and Psi states decay.

        Args:
            times: Non-negative evaluation times
            state: Initial two-qubit state
            omega_ratio: Drive strength Omega1/gamma
            gamma_t: Scaled drive duration gamma*T
            gamma: Collective dephasing rate

        Returns:
            One record per requested time
        """
        from ..dynamics import ChannelParams, DrivePulse, evolve_trajectory
        from ..handlers import ResponseFormatter
        from ..measures import concurrence, von_neumann_entropy
        from ..states import parse_two_qubit_state

        formatter = ResponseFormatter()
        try:
            rho0 = parse_two_qubit_state(state)
            pulse = DrivePulse.from_scaled(omega_ratio, gamma_t, gamma)
            states = evolve_trajectory(rho0, pulse, ChannelParams(gamma), times)
            records = [
                {'t': t, 'concurrence': concurrence(rho), 'entropy': von_neumann_entropy(rho)}
                for t, rho in zip(times, states)
            ]
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)

        return {
            'status': 'success',
            'records': records,
            'summary': formatter.summarize_records(records)
        }

    @mcp.tool()
    def dephasing_sweep(
        state: str = "phi-",
        omega_ratio: float = DEFAULT_OMEGA_RATIO,
        gamma_t_min: float = DEFAULT_GAMMA_T_MIN,
        gamma_t_max: float = DEFAULT_GAMMA_T_MAX,
        points: int = DEFAULT_GAMMA_T_POINTS,
        gamma: float = DEFAULT_GAMMA,
        window: int = DEFAULT_EXTREMA_WINDOW,
        workers: int = DEFAULT_WORKERS,
        include_records: bool = True
    ) -> Dict[str, Any]:
        """
        Stationary concurrence and entropy over a gamma*T grid, with the extrema correspondence.

        USAGE: The extrema verdict says whether every concurrence maximum sits next to an
        entropy minimum.

        Args:
            state: Initial two-qubit state
            omega_ratio: Drive strength Omega1/gamma
            gamma_t_min: First grid point
            gamma_t_max: Last grid point
            points: Number of grid points
            gamma: Collective dephasing rate
            window: Matching window in grid indices
            workers: Threads used for grid points
            include_records: Return every record, not only the summary

        Returns:
            Records, per-column min/max and the extrema verdict
        """
        from ..handlers import ResponseFormatter
        from ..sweep import SweepSpec, extrema_correspondence, linear_grid, sweep_stationary

        formatter = ResponseFormatter()
        try:
            spec = SweepSpec(
                omega_ratio=omega_ratio,
                gamma=gamma,
                initial=state,
                gamma_t_grid=linear_grid(gamma_t_min, gamma_t_max, points),
                workers=workers
            )
            records = sweep_stationary(spec)
            rows = [r.as_dict() for r in records]
            extrema = extrema_correspondence(records, window)
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)

        response = {
            'status': 'success',
            'message': SUCCESS_MESSAGES['sweep'],
            'summary': formatter.summarize_records(rows),
            'extrema': formatter.format_extrema(extrema.as_dict())
        }
        if include_records:
            response['records'] = rows
        return response

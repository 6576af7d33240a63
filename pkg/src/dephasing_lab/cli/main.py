#!/usr/bin/env python3
"""
dephasing-lab command line - single evolutions, stationary states, sweeps and
the acceptance suite
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..dynamics import ChannelParams, DrivePulse, evolve_trajectory, stationary_state
from ..eraser import extract_coefficients, stationary_ghz_blocks, trace_out_qubit3
from ..handlers import ErrorHandler, ResponseFormatter
from ..handlers.error_handler import InvalidInputError
from ..measures import concurrence, concurrence_x, entropy_x, von_neumann_entropy
from ..states import ConditionalBlocks, parse_state, parse_two_qubit_state
from ..sweep import (
    SweepSpec,
    extrema_correspondence,
    linear_grid,
    sweep_eraser,
    sweep_mixedness,
    sweep_stationary,
)
from ..utils.constants import (
    EXIT_NUMERICAL_FAILURE,
    EXIT_OK,
    OUTPUT_FORMATS,
    STATE_DESCRIPTOR_HELP,
    SUCCESS_MESSAGES,
    VERIFY_CHECKS,
)
from .config import COMMANDS, CliConfig, build_config
from .output import write_records
from .verify import run_checks

logger = logging.getLogger(__name__)

Rows = List[Dict[str, Any]]

EVOLVE_COLUMNS = ('t', 'concurrence', 'entropy')
STATIONARY_X_COLUMNS = ('gamma_t', 'a', 'b', 'c', 'd', 'f_real', 'f_imag', 'concurrence', 'entropy')
STATIONARY_GHZ_COLUMNS = (
    'gamma_t', 'zeta_a', 'zeta_b', 'zeta_c', 'zeta_d', 'zeta_f_real', 'zeta_f_imag', 'traced_concurrence'
)


def build_parser() -> argparse.ArgumentParser:
    # every option defaults to SUPPRESS so only flags actually given override the config file
    options = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    options.add_argument('--state', help=f"initial state: {STATE_DESCRIPTOR_HELP}")
    options.add_argument('--omega-ratio', dest='omega_ratio', type=float, help="drive strength Omega1/gamma")
    options.add_argument('--gamma', type=float, help="collective dephasing rate (default 1.0)")
    options.add_argument('--gamma-t', dest='gamma_t', type=float, help="scaled drive duration gamma*T")
    options.add_argument('--gamma-t-min', dest='gamma_t_min', type=float)
    options.add_argument('--gamma-t-max', dest='gamma_t_max', type=float)
    options.add_argument('--points', type=int, help="number of gamma*T (or time) grid points")
    options.add_argument('--theta-points', dest='theta_points', type=int)
    options.add_argument('--theta-min', dest='theta_min', type=float)
    options.add_argument('--theta-max', dest='theta_max', type=float)
    options.add_argument('--phi', type=float, help="eraser basis phase in [0, 2pi)")
    options.add_argument('--t', type=float, help="evaluation time for evolve")
    options.add_argument('--t-max', dest='t_max', type=float, help="trajectory end time for evolve")
    options.add_argument('--r-points', dest='r_points', type=int, help="Werner weight grid size")
    options.add_argument('--window', type=int, help="extrema matching window in grid indices")
    options.add_argument('--workers', type=int, help="threads used to evaluate grid points")
    options.add_argument('-o', '--output', type=Path, help="output file (stdout when omitted)")
    options.add_argument('--format', choices=OUTPUT_FORMATS)
    options.add_argument('--config', type=Path, help="key=value file with default values")
    options.add_argument(
        '--check', dest='checks', action='append', choices=VERIFY_CHECKS, help="run only this check (repeatable)"
    )
    options.add_argument('--tolerance-scale', dest='tolerance_scale', type=float)
    options.add_argument('-v', '--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='dephasing-lab',
        description="Two qubits under collective dephasing with a finite-time drive, "
        "and remote entanglement control through a GHZ quantum eraser",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    helps = {
        'evolve': "density matrix at t (or along a trajectory up to --t-max)",
        'stationary': "stationary state after a drive of duration gamma*T",
        'sweep': "stationary concurrence and entropy over a gamma*T grid",
        'eraser-sweep': "average concurrence after measuring qubit 3 over (gamma*T, theta)",
        'mixedness-sweep': "stationary concurrence and entropy of Werner states over r",
        'verify': "run the acceptance checks",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[options], help=helps[command])
    return parser


def _sweep_spec(config: CliConfig, theta: bool = False) -> SweepSpec:
    return SweepSpec(
        omega_ratio=config.omega_ratio,
        gamma=config.gamma,
        initial=config.resolved_state,
        gamma_t_grid=linear_grid(config.gamma_t_min, config.gamma_t_max, config.points),
        theta_grid=linear_grid(config.theta_min, config.theta_max, config.theta_points) if theta else None,
        phi=config.phi,
        workers=config.workers,
    )


def cmd_evolve(config: CliConfig) -> Tuple[Rows, Sequence[str], List[str]]:
    rho0 = parse_two_qubit_state(config.resolved_state)
    pulse = DrivePulse.from_scaled(config.omega_ratio, config.gamma_t, config.gamma)
    if config.t is not None:
        times = (config.t,)
    elif config.t_max is not None:
        times = linear_grid(0.0, config.t_max, config.points)
    else:
        times = (pulse.duration_t,)
    states = evolve_trajectory(rho0, pulse, ChannelParams(config.gamma), times)
    rows = [
        {'t': t, 'concurrence': concurrence(rho), 'entropy': von_neumann_entropy(rho)}
        for t, rho in zip(times, states)
    ]
    return rows, EVOLVE_COLUMNS, []


def cmd_stationary(config: CliConfig) -> Tuple[Rows, Sequence[str], List[str]]:
    params = ChannelParams(config.gamma)
    pulse = DrivePulse.from_scaled(config.omega_ratio, config.gamma_t, config.gamma)
    state = parse_state(config.resolved_state)
    if isinstance(state, ConditionalBlocks):
        blocks = stationary_ghz_blocks(pulse, params)
        zeta = extract_coefficients(blocks)
        traced = concurrence(trace_out_qubit3(blocks))
        row = {'gamma_t': config.gamma_t, **zeta.as_dict(), 'traced_concurrence': traced}
        notes = [f"zeta = {zeta.as_dict()}", f"C(qubits 1,2 with qubit 3 traced out) = {traced:.12g}"]
        return [row], STATIONARY_GHZ_COLUMNS, notes

    x = stationary_state(state, pulse, params)
    c_s, s = concurrence_x(x), entropy_x(x)
    row = {'gamma_t': config.gamma_t, **x.as_dict(), 'concurrence': c_s, 'entropy': s}
    return [row], STATIONARY_X_COLUMNS, [f"C_s={c_s + 0.0:.12g} S={s + 0.0:.12g}"]


def cmd_sweep(config: CliConfig) -> Tuple[Rows, Sequence[str], List[str]]:
    records = sweep_stationary(_sweep_spec(config))
    notes = []
    if len(records) >= 3:
        report = ResponseFormatter().format_extrema(extrema_correspondence(records, config.window).as_dict())
        notes.extend(report['checklist']['completed'] + report['checklist']['warnings'])
    return [r.as_dict() for r in records], records[0].columns, notes


def cmd_eraser_sweep(config: CliConfig) -> Tuple[Rows, Sequence[str], List[str]]:
    records = sweep_eraser(_sweep_spec(config, theta=True))
    return [r.as_dict() for r in records], records[0].columns, []


def cmd_mixedness_sweep(config: CliConfig) -> Tuple[Rows, Sequence[str], List[str]]:
    records = sweep_mixedness(
        config.omega_ratio,
        config.gamma,
        config.gamma_t,
        linear_grid(0.0, 1.0, config.r_points),
        workers=config.workers,
    )
    return [r.as_dict() for r in records], records[0].columns, []


COMMAND_HANDLERS = {
    'evolve': cmd_evolve,
    'stationary': cmd_stationary,
    'sweep': cmd_sweep,
    'eraser-sweep': cmd_eraser_sweep,
    'mixedness-sweep': cmd_mixedness_sweep,
}


def verify(config: CliConfig) -> int:
    formatter = ResponseFormatter()
    results = run_checks(config.checks or None, config.tolerance_scale)
    summary = formatter.format_verify_results(r.as_dict() for r in results)
    for line in summary['checks']:
        print(line)
    if summary['all_passed']:
        print(f"{formatter.checklist_icons['completed']} {SUCCESS_MESSAGES['verify']}")
        return EXIT_OK
    print(f"{formatter.checklist_icons['error']} first failing check: {summary['failed'][0]}")
    return EXIT_NUMERICAL_FAILURE


def run(config: CliConfig) -> int:
    """Dispatch a validated config; returns the process exit status"""
    formatter = ResponseFormatter()
    try:
        if config.command == 'verify':
            return verify(config)
        rows, columns, notes = COMMAND_HANDLERS[config.command](config)
        text = write_records(rows, columns, config.format, config.output)
        # keep stdout clean for the data when no output file is given
        report_stream = sys.stdout if config.output is not None else sys.stderr
        if config.output is None:
            sys.stdout.write(text)

        title = SUCCESS_MESSAGES[config.command]
        for line in formatter.render_summary(formatter.summarize_records(rows), title=title):
            print(line, file=report_stream)
        for note in notes:
            print(f"  {note}", file=report_stream)
        if config.output is not None:
            print(f"  written to {config.output}", file=report_stream)
        return EXIT_OK
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        return _report_error(exc)


def _report_error(exc: BaseException) -> int:
    analysis = ErrorHandler().parse_error(exc)
    logger.debug("command failed", exc_info=exc)
    for line in ResponseFormatter().render_error(analysis):
        print(line, file=sys.stderr)
    return analysis['exit_code']


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    flags = vars(args)
    config_path = flags.pop('config', None)
    _configure_logging(bool(flags.get('verbose', False)))
    try:
        config = build_config(flags, config_path)
    except InvalidInputError as exc:
        return _report_error(exc)
    return run(config)


def cli() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli()

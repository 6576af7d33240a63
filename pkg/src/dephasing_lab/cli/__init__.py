"""
Command-line front end
"""

from .config import COMMANDS, CliConfig, build_config, read_config_file
from .main import build_parser, main, run, verify
from .output import read_csv_records, render_records, write_records
from .verify import CHECKS, CheckResult, ConservationTally, VerifyContext, run_check, run_checks

__all__ = [
    "CHECKS",
    "COMMANDS",
    "CheckResult",
    "CliConfig",
    "ConservationTally",
    "VerifyContext",
    "build_config",
    "build_parser",
    "main",
    "read_config_file",
    "read_csv_records",
    "render_records",
    "run",
    "run_check",
    "run_checks",
    "verify",
    "write_records",
]

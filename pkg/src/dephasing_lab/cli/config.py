"""
Validated command-line configuration and the key=value config file reader
"""

import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..handlers.error_handler import InvalidInputError
from ..utils.constants import (
    DEFAULT_EXTREMA_WINDOW,
    DEFAULT_GAMMA,
    DEFAULT_GAMMA_T_MAX,
    DEFAULT_GAMMA_T_MIN,
    DEFAULT_GAMMA_T_POINTS,
    DEFAULT_OMEGA_RATIO,
    DEFAULT_R_POINTS,
    DEFAULT_THETA_POINTS,
    DEFAULT_WORKERS,
    VERIFY_CHECKS,
)

Command = Literal['evolve', 'stationary', 'sweep', 'eraser-sweep', 'mixedness-sweep', 'verify']

COMMANDS = ('evolve', 'stationary', 'sweep', 'eraser-sweep', 'mixedness-sweep', 'verify')

# fields that hold lists when read from a config file
_LIST_FIELDS = {'checks'}


class CliConfig(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)

    command: Command
    state: Optional[str] = None
    omega_ratio: float = Field(DEFAULT_OMEGA_RATIO, ge=0)
    gamma: float = Field(DEFAULT_GAMMA, gt=0)
    gamma_t: float = Field(0.0, ge=0)
    gamma_t_min: float = Field(DEFAULT_GAMMA_T_MIN, ge=0)
    gamma_t_max: float = Field(DEFAULT_GAMMA_T_MAX, ge=0)
    points: int = Field(DEFAULT_GAMMA_T_POINTS, ge=1)
    theta_min: float = Field(0.0, ge=0, le=math.pi)
    theta_max: float = Field(math.pi, ge=0, le=math.pi)
    theta_points: int = Field(DEFAULT_THETA_POINTS, ge=1)
    phi: float = Field(0.0, ge=0, lt=2 * math.pi)
    t: Optional[float] = Field(None, ge=0)
    t_max: Optional[float] = Field(None, gt=0)
    r_points: int = Field(DEFAULT_R_POINTS, ge=1)
    window: int = Field(DEFAULT_EXTREMA_WINDOW, ge=0)
    workers: int = Field(DEFAULT_WORKERS, ge=1)
    output: Optional[Path] = None
    format: Literal['csv', 'json'] = 'csv'
    checks: List[str] = Field(default_factory=list)
    tolerance_scale: float = Field(1.0, ge=0)
    verbose: bool = False

    @field_validator('omega_ratio', 'gamma', 'gamma_t', 'gamma_t_min', 'gamma_t_max', 'phi', 'tolerance_scale')
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @field_validator('checks')
    @classmethod
    def _known_checks(cls, value: List[str]) -> List[str]:
        unknown = [name for name in value if name not in VERIFY_CHECKS]
        if unknown:
            raise ValueError(f"unknown checks {unknown}; choose from {', '.join(VERIFY_CHECKS)}")
        return value

    @model_validator(mode='after')
    def _grids(self) -> 'CliConfig':
        if self.points > 1 and not self.gamma_t_min < self.gamma_t_max:
            raise ValueError("gamma_t_min must be below gamma_t_max")
        if self.theta_points > 1 and not self.theta_min < self.theta_max:
            raise ValueError("theta_min must be below theta_max")
        if self.t is not None and self.t_max is not None:
            raise ValueError("pass either t or t_max, not both")
        return self

    @property
    def resolved_state(self) -> str:
        if self.state is not None:
            return self.state
        return 'ghz' if self.command == 'eraser-sweep' else 'phi-'


def read_config_file(path: Path) -> Dict[str, Any]:
    """Parse `key = value` lines; '#' starts a comment, dashes in keys become underscores"""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read config file {path}: {exc}") from None

    values: Dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise InvalidInputError(f"{path}:{number}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split('=', 1))
        key = key.replace('-', '_')
        if key == 'check':
            key = 'checks'
        if key in _LIST_FIELDS:
            values[key] = [item.strip() for item in value.split(',') if item.strip()]
        else:
            values[key] = value
    return values


def build_config(flags: Dict[str, Any], config_path: Optional[Path] = None) -> CliConfig:
    """Merge config-file values with explicit flags (flags win) and validate"""
    values: Dict[str, Any] = read_config_file(config_path) if config_path else {}
    values.update(flags)
    try:
        return CliConfig(**values)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in exc.errors()
        )
        raise InvalidInputError(f"invalid configuration: {problems}") from None

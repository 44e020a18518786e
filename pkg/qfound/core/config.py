from pathlib import Path
from typing import Literal

from environs import Env
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator


class LogSettings:
    def __init__(self, level: str, directory: str | None):
        self.level = level
        self.directory = directory or None


class Units:
    """Natural units used whenever a caller does not pass constants explicitly."""

    def __init__(self, hbar: float = 1.0, mass: float = 1.0, omega: float = 1.0):
        self.hbar = hbar
        self.mass = mass
        self.omega = omega


class Config:
    def __init__(self, log: LogSettings, units: Units):
        self.log = log
        self.units = units


def load_config(path: str | None = None) -> Config:
    env = Env()
    env.read_env(path)
    return Config(log=LogSettings(level=env.str('QFOUND_LOG_LEVEL', 'INFO'),
                                  directory=env.str('QFOUND_LOG_DIR', '')),
                  units=Units())


config = load_config()


class Tolerances(BaseModel):
    """Pass/fail thresholds of the audit suites; overridable from the command line."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    schwarzian_analytic: PositiveFloat = 1e-6
    schwarzian_fd: PositiveFloat = 1e-3
    invariance: PositiveFloat = 1e-6
    cocycle: PositiveFloat = 1e-5
    wronskian: PositiveFloat = 1e-7
    spectrum_harmonic: PositiveFloat = 1e-6
    spectrum_well: PositiveFloat = 1e-4
    residual: PositiveFloat = 1e-5
    bipolar: PositiveFloat = 1e-5
    trajectory_linearity: PositiveFloat = 1e-4
    tomography: PositiveFloat = 1e-10
    exponent: PositiveFloat = 1e-12
    exponent_gap: PositiveFloat = 1e-3
    distance: PositiveFloat = 1e-12
    no_signalling: PositiveFloat = 1e-12
    amplitudes: PositiveFloat = 1e-15

    def with_overrides(self, overrides: dict[str, float]) -> "Tolerances":
        unknown = set(overrides) - set(type(self).model_fields)
        if unknown:
            raise ValueError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
        return type(self).model_validate({**self.model_dump(), **overrides})


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    q_min: float
    q_max: float
    n_points: int = Field(ge=9)

    @model_validator(mode='after')
    def _ordered(self) -> "GridSpec":
        if not self.q_min < self.q_max:
            raise ValueError("grid requires q_min < q_max")
        return self


class RunConfig(BaseModel):
    """Everything a command needs besides its own positional arguments."""

    model_config = ConfigDict(frozen=True)

    hbar: PositiveFloat = config.units.hbar
    mass: PositiveFloat = config.units.mass
    omega: PositiveFloat = config.units.omega
    grid: GridSpec | None = None
    output_format: Literal['csv', 'json'] = 'csv'
    output_path: Path | None = None
    seed: int = 0
    n_points: PositiveInt = 4001
    tolerances: Tolerances = Tolerances()

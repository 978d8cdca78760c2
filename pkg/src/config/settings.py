"""
Application Settings and Configuration
Uses environment variables (and an optional .env file) with sensible defaults
"""

import os
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, TypeVar

from dotenv import load_dotenv

from src.exceptions import ConfigError

T = TypeVar("T")

ENV_PREFIX = "SINCKDV_"


@dataclass(frozen=True)
class SolverConfig:
    """Numerical tolerances for the linear algebra and stability analysis"""
    stability_tol: float = 1e-8
    # restart cap, Ritz tolerance and start seed of the spectral-radius estimate
    power_iters: int = 500
    power_tol: float = 1e-10
    power_seed: int = 0
    pivot_tol: float = 64 * sys.float_info.epsilon


@dataclass(frozen=True)
class OutputConfig:
    """Artifact output configuration"""
    out_dir: str = "results"
    table_precision: int = 6
    write_svg: bool = False


@dataclass(frozen=True)
class RunnerConfig:
    """Experiment runner configuration"""
    jobs: int = 1
    stability_gate: bool = True
    # the gate trips when rho(P0) ** n_steps exceeds this factor
    gate_growth: float = 10.0
    boundary_warn_threshold: float = 1e-3


def parse_bool(value: str) -> bool:
    """Parse the usual textual spellings of a boolean"""
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _env(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ConfigError(ENV_PREFIX + name, str(e))


@dataclass
class Settings:
    """Main application settings"""
    solver: SolverConfig = field(default_factory=SolverConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    runner: RunnerConfig = field(default_factory=RunnerConfig)
    log_level: str = "INFO"
    debug: bool = False

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> "Settings":
        """Load settings from a .env file and SINCKDV_* environment variables"""
        load_dotenv(dotenv_path)
        solver_defaults = SolverConfig()
        output_defaults = OutputConfig()
        runner_defaults = RunnerConfig()
        debug = _env("DEBUG", False, parse_bool)
        return cls(
            solver=SolverConfig(
                stability_tol=_env("STABILITY_TOL", solver_defaults.stability_tol, float),
                power_iters=_env("POWER_ITERS", solver_defaults.power_iters, int),
                power_tol=_env("POWER_TOL", solver_defaults.power_tol, float),
            ),
            output=OutputConfig(
                out_dir=_env("OUT_DIR", output_defaults.out_dir, str),
                write_svg=_env("SVG", output_defaults.write_svg, parse_bool),
            ),
            runner=RunnerConfig(
                jobs=_env("JOBS", runner_defaults.jobs, int),
                stability_gate=_env("STABILITY_GATE", runner_defaults.stability_gate, parse_bool),
                gate_growth=_env("GATE_GROWTH", runner_defaults.gate_growth, float),
                boundary_warn_threshold=_env("BOUNDARY_WARN", runner_defaults.boundary_warn_threshold, float),
            ),
            log_level=_env("LOG_LEVEL", "DEBUG" if debug else "INFO", str),
            debug=debug,
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached application settings"""
    return Settings.from_env()

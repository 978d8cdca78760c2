"""Configuration module"""
from .settings import (
    OutputConfig,
    RunnerConfig,
    Settings,
    SolverConfig,
    get_settings,
    parse_bool,
)

__all__ = [
    "OutputConfig",
    "RunnerConfig",
    "Settings",
    "SolverConfig",
    "get_settings",
    "parse_bool",
]

"""Presets, configuration resolution, experiment execution and CLI"""
from .cli import build_parser, main
from .config import ExperimentConfig, format_config, read_config_file, resolve_config
from .experiment import ExitStatus, RunArtifacts, run_experiment
from .plotting import render_snapshot_svg, write_snapshot_svg
from .presets import PRESETS, Preset, get_preset, list_presets, preset_names

__all__ = [
    "build_parser",
    "main",
    "ExperimentConfig",
    "format_config",
    "read_config_file",
    "resolve_config",
    "ExitStatus",
    "RunArtifacts",
    "run_experiment",
    "render_snapshot_svg",
    "write_snapshot_svg",
    "PRESETS",
    "Preset",
    "get_preset",
    "list_presets",
    "preset_names",
]

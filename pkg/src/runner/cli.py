"""
Command-line interface
``solve`` runs presets or custom configurations, ``presets`` lists them
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from src.config import Settings, get_settings
from src.exceptions import ConfigError
from src.utils import configure_logging, get_logger

from .config import ExperimentConfig, format_config, resolve_config
from .experiment import ExitStatus, RunArtifacts, run_experiment
from .presets import list_presets, preset_names

logger = get_logger(__name__)

# flag dest -> config key
FLAG_KEYS = {
    "equation": "equation",
    "epsilon": "epsilon",
    "nu": "nu",
    "mu": "mu",
    "power": "power",
    "a": "a",
    "b": "b",
    "n": "n",
    "dt": "dt",
    "T": "T",
    "theta": "theta",
    "observers": "observers",
    "out": "out",
    "svg": "svg",
    "stability_gate": "stability_gate",
    "warn_boundary": "warn_boundary",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sinckdv",
        description="Sinc-collocation solver for the KdV and KdV-Burgers equations.",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default from SINCKDV_LOG_LEVEL or INFO)")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("presets", help="List the available presets")

    solve = commands.add_parser("solve", help="Run presets or a custom configuration")
    solve.add_argument("--preset", default=None, help="Preset name, comma-separated names, or 'all'")
    solve.add_argument("--config", default=None, help="Flat 'key = value' configuration file")
    solve.add_argument("--equation", choices=["kdv", "kdvb"], default=None)
    solve.add_argument("--epsilon", type=float, default=None, help="Nonlinear coefficient")
    solve.add_argument("--nu", type=float, default=None, help="Diffusion coefficient")
    solve.add_argument("--mu", type=float, default=None, help="Dispersion coefficient")
    solve.add_argument("--power", type=int, default=None, help="Nonlinearity power p in u^p u_x")
    solve.add_argument("--a", type=float, default=None, help="Left endpoint")
    solve.add_argument("--b", type=float, default=None, help="Right endpoint")
    solve.add_argument("--n", type=int, default=None, help="Number of grid nodes")
    solve.add_argument("--dt", type=float, default=None, help="Time step")
    solve.add_argument("--T", type=float, default=None, help="Final time")
    solve.add_argument("--theta", type=float, default=None, help="Implicitness weight in [0, 1]")
    solve.add_argument("--observers", default=None, help="Comma-separated observer times")
    solve.add_argument("--out", default=None, help="Output directory")
    solve.add_argument("--jobs", type=int, default=None, help="Presets run concurrently")
    solve.add_argument("--svg", action="store_const", const=True, default=None, help="Write one SVG per snapshot")
    solve.add_argument(
        "--no-stability-gate",
        dest="stability_gate",
        action="store_const",
        const=False,
        default=None,
        help="Run even when the initial amplification matrix is unstable",
    )
    solve.add_argument(
        "--warn-boundary",
        dest="warn_boundary",
        type=float,
        default=None,
        help="Boundary magnitude of the exact solution that triggers a notice (inf disables it)",
    )
    return parser


def _preset_list(value: Optional[str]) -> List[Optional[str]]:
    if value is None:
        return [None]
    if value.strip() == "all":
        return preset_names()
    return [name.strip() for name in value.split(",") if name.strip()]


def _run_all(configs: Sequence[ExperimentConfig], settings: Settings, jobs: int) -> List[RunArtifacts]:
    if jobs <= 1 or len(configs) <= 1:
        return [run_experiment(config, settings) for config in configs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_experiment, configs, [settings] * len(configs)))


def solve(args: argparse.Namespace, settings: Settings) -> int:
    overrides = {key: getattr(args, dest) for dest, key in FLAG_KEYS.items()}
    configs = []
    try:
        for name in _preset_list(args.preset):
            configs.append(resolve_config({**overrides, "preset": name}, args.config, settings))
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return int(ExitStatus.CONFIG_ERROR)

    for config in configs:
        print(f"# {config.name}")
        print(format_config(config))

    jobs = args.jobs if args.jobs is not None else settings.runner.jobs
    if jobs < 1:
        print("Configuration error: jobs: must be >= 1", file=sys.stderr)
        return int(ExitStatus.CONFIG_ERROR)

    results = _run_all(configs, settings, jobs)
    for artifacts in results:
        if artifacts.success:
            logger.info(f"{artifacts.name}: wrote {artifacts.records_path}, {artifacts.snapshots_path}, {artifacts.stability_path}")
        else:
            print(f"{artifacts.name}: {artifacts.error}", file=sys.stderr)
    return int(max(artifacts.exit_status for artifacts in results))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command and return the process exit code"""
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return int(ExitStatus.CONFIG_ERROR)
    configure_logging(args.log_level or settings.log_level)

    if args.command == "presets":
        print(list_presets())
        return int(ExitStatus.SUCCESS)
    return solve(args, settings)

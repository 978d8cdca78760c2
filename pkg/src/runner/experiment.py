"""
Experiment execution
Runs one resolved configuration and writes its CSV and SVG artifacts
"""

from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd

from src.analysis import RECORD_COLUMNS, STABILITY_COLUMNS, StabilityReport, assess_stability
from src.config import Settings
from src.exceptions import SingularMatrixError, SolverError
from src.model import ProblemSetup, build_operators, exact_solution, exactness_check
from src.solver import Trajectory, initial_state, run
from src.utils import get_logger

from .config import ExperimentConfig
from .plotting import write_snapshot_svg

logger = get_logger(__name__)

RECORDS_FILE = "records.csv"
SNAPSHOTS_FILE = "snapshots.csv"
STABILITY_FILE = "stability.csv"
SNAPSHOT_COLUMNS = ("x", "u_numeric", "u_exact", "t")


class ExitStatus(IntEnum):
    """Process exit codes"""
    SUCCESS = 0
    CONFIG_ERROR = 2
    SOLVER_FAILURE = 3
    UNSTABLE = 4


@dataclass
class RunArtifacts:
    """Files produced by one run and how it ended"""
    name: str
    out_dir: Path
    records_path: Optional[Path] = None
    snapshots_path: Optional[Path] = None
    stability_path: Optional[Path] = None
    svg_paths: List[Path] = field(default_factory=list)
    exit_status: ExitStatus = ExitStatus.SUCCESS
    reference_only: bool = False
    stability: Optional[StabilityReport] = None
    error: Optional[str] = None

    @property
    def success(self) -> bool:
        return self.exit_status is ExitStatus.SUCCESS


# =============================================================================
# CSV WRITERS
# =============================================================================

def write_records(trajectory: Trajectory, path: Path, precision: int = 6) -> Path:
    """One row per observer time, numbers rounded to precision significant digits"""
    frame = pd.DataFrame([r.to_row() for r in trajectory.records], columns=list(RECORD_COLUMNS))
    frame.to_csv(path, index=False, float_format=f"%.{precision}g", lineterminator="\n")
    return path


def write_snapshots(trajectory: Trajectory, x: np.ndarray, path: Path) -> Path:
    """Snapshots stacked in time order, full precision"""
    blocks = [
        pd.DataFrame({"x": x, "u_numeric": s.u, "u_exact": s.u_exact, "t": np.full(x.shape, s.t)})
        for s in trajectory.snapshots
    ]
    frame = pd.concat(blocks, ignore_index=True) if blocks else pd.DataFrame(columns=list(SNAPSHOT_COLUMNS))
    frame.to_csv(path, index=False, columns=list(SNAPSHOT_COLUMNS), lineterminator="\n")
    return path


def write_stability(report: StabilityReport, path: Path) -> Path:
    """Single-row stability report"""
    frame = pd.DataFrame([report.to_row()], columns=list(STABILITY_COLUMNS))
    frame.to_csv(path, index=False, lineterminator="\n")
    return path


# =============================================================================
# CHECKS
# =============================================================================

def check_reference(setup: ProblemSetup, observers) -> bool:
    """True when the exact solution does not satisfy the equation and only serves as a reference"""
    times = np.asarray(sorted(set(observers) | {0.0}), dtype=float)
    x, t = np.meshgrid(setup.grid.nodes, times)
    report = exactness_check(setup.equation, x.ravel(), t.ravel())
    if not report.is_exact:
        logger.warning(
            f"exact solution used as reference only "
            f"(relative PDE residual {report.max_relative_residual:.3g})"
        )
    return not report.is_exact


def check_boundaries(setup: ProblemSetup, observers, threshold: float) -> float:
    """Largest boundary magnitude of the exact solution; warns above threshold"""
    times = np.asarray(sorted(set(observers) | {setup.t_final}), dtype=float)
    ends = np.abs(np.asarray([
        exact_solution(setup.equation, np.array([setup.grid.a, setup.grid.b]), t) for t in times
    ]))
    largest = float(np.max(ends))
    if largest > threshold:
        logger.warning(
            f"exact solution reaches {largest:.3g} at the boundary (threshold {threshold:g}); "
            f"Dirichlet data is far from zero"
        )
    return largest


# =============================================================================
# RUN
# =============================================================================

def _write_outputs(
    artifacts: RunArtifacts,
    trajectory: Trajectory,
    setup: ProblemSetup,
    config: ExperimentConfig,
    settings: Settings,
) -> None:
    out = artifacts.out_dir
    artifacts.records_path = write_records(trajectory, out / RECORDS_FILE, settings.output.table_precision)
    artifacts.snapshots_path = write_snapshots(trajectory, np.asarray(setup.grid.nodes), out / SNAPSHOTS_FILE)
    if config.svg:
        for i, snapshot in enumerate(trajectory.snapshots):
            svg = write_snapshot_svg(
                out / f"snapshot_{i:03d}.svg",
                setup.grid.nodes,
                snapshot.u,
                snapshot.u_exact,
                f"{config.name} t={snapshot.t:g}",
            )
            artifacts.svg_paths.append(svg)


def run_experiment(config: ExperimentConfig, settings: Optional[Settings] = None) -> RunArtifacts:
    """
    Run one experiment and write its artifacts under ``out_dir/<name>/``.

    Args:
        config: Resolved experiment configuration
        settings: Application settings (tolerances, output precision)

    Returns:
        RunArtifacts; ``exit_status`` tells success, solver failure or a
        failed stability gate, and partial CSVs are written on failure
    """
    settings = settings or Settings()
    setup = config.to_setup()
    out = Path(config.out_dir) / config.name
    out.mkdir(parents=True, exist_ok=True)
    artifacts = RunArtifacts(name=config.name, out_dir=out)
    logger.info(f"Starting {config.name}: {setup.equation.kind.value}, n={setup.grid.n}, dt={setup.dt}, T={setup.t_final}")

    artifacts.reference_only = check_reference(setup, config.observers)
    check_boundaries(setup, config.observers, config.warn_boundary)

    ops = build_operators(setup.grid)
    try:
        report = assess_stability(initial_state(setup), setup, ops, settings.solver)
    except SingularMatrixError as e:
        artifacts.exit_status = ExitStatus.SOLVER_FAILURE
        artifacts.error = f"Implicit matrix is singular: {e}"
        logger.error(artifacts.error)
        return artifacts
    artifacts.stability = report
    artifacts.stability_path = write_stability(report, out / STABILITY_FILE)

    if report.converged and not report.stable:
        growth = report.growth_over(setup.n_steps)
        if config.stability_gate and growth > settings.runner.gate_growth:
            artifacts.exit_status = ExitStatus.UNSTABLE
            artifacts.error = (
                f"Scheme is unstable: rho(P) = {report.rho:.6g}, "
                f"error growth up to {growth:.3g} over {setup.n_steps} steps"
            )
            logger.error(artifacts.error)
            return artifacts
        logger.info(
            f"rho(P) = {report.rho:.6g} exceeds 1 but bounds error growth by {growth:.6g} "
            f"over {setup.n_steps} steps"
        )

    try:
        trajectory = run(setup, config.observers, pivot_tol=settings.solver.pivot_tol)
    except SolverError as e:
        artifacts.exit_status = ExitStatus.SOLVER_FAILURE
        artifacts.error = str(e)
        if e.partial is not None:
            _write_outputs(artifacts, e.partial, setup, config, settings)
        return artifacts

    _write_outputs(artifacts, trajectory, setup, config, settings)
    logger.info(f"Finished {config.name}: artifacts in {out}")
    return artifacts

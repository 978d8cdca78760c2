"""
Theta-scheme time stepping
Assembles and solves the quasilinearized collocation system M u^{n+1} = R
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from src.analysis import DiagnosticsRecord, make_record
from src.config import SolverConfig
from src.exceptions import DomainError, SingularMatrixError, SolverError
from src.linalg import condition_estimate, lu_factor
from src.model import (
    CollocationOperators,
    ProblemSetup,
    boundary_values,
    build_operators,
    exact_solution,
    initial_condition,
    linearized_operator,
    spatial_operator,
    steps_for,
)
from src.utils import get_logger

logger = get_logger(__name__)

# Number of progress lines logged over one run
PROGRESS_LINES = 10


@dataclass(frozen=True)
class SolverState:
    """Nodal values u^n at time t_n after step_index accepted steps"""
    t: float
    u: NDArray[np.float64]
    step_index: int = 0


@dataclass(frozen=True)
class AssembledSystem:
    """Linear system M u^{n+1} = R of one step"""
    m: NDArray[np.float64]
    r: NDArray[np.float64]


@dataclass(frozen=True)
class Snapshot:
    """Numerical and exact solution at an observer time"""
    t: float
    u: NDArray[np.float64]
    u_exact: NDArray[np.float64]


@dataclass
class Trajectory:
    """Snapshots and diagnostics recorded by a run"""
    snapshots: List[Snapshot] = field(default_factory=list)
    records: List[DiagnosticsRecord] = field(default_factory=list)
    final_state: Optional[SolverState] = None

    @property
    def times(self) -> List[float]:
        return [s.t for s in self.snapshots]


def initial_state(setup: ProblemSetup) -> SolverState:
    """State at t = 0 sampled from the exact solution"""
    return SolverState(t=0.0, u=initial_condition(setup), step_index=0)


def _check_state(state: SolverState, setup: ProblemSetup) -> None:
    if state.u.shape != (setup.grid.n,):
        raise DomainError(f"state has {state.u.shape[0]} values but the grid has {setup.grid.n} nodes")


# =============================================================================
# ONE STEP
# =============================================================================

def assemble(
    state: SolverState,
    setup: ProblemSetup,
    ops: Optional[CollocationOperators] = None,
) -> AssembledSystem:
    """
    Build the linearized one-step system.

    Interior rows hold
        [I + dt theta K(u^n)] u^{n+1}
            = u^n + dt theta eps p (u^n)^p D1 u^n - dt (1 - theta) F(u^n)
    where F is the spatial operator and K its Jacobian at u^n. The first and
    last rows are identity rows carrying g_a, g_b at t^{n+1}.
    """
    _check_state(state, setup)
    ops = ops or build_operators(setup.grid)
    eq, dt, theta = setup.equation, setup.dt, setup.theta
    u = state.u

    m = np.eye(setup.grid.n) + dt * theta * linearized_operator(u, eq, ops)
    advection = u ** eq.power * (ops.d1 @ u)
    r = u + dt * theta * eq.epsilon * eq.power * advection - dt * (1.0 - theta) * spatial_operator(u, eq, ops)

    g_a, g_b = boundary_values(setup, state.t + dt)
    for row, value in ((0, g_a), (-1, g_b)):
        m[row, :] = 0.0
        m[row, row] = 1.0
        r[row] = value
    return AssembledSystem(m=m, r=r)


def step(
    state: SolverState,
    setup: ProblemSetup,
    ops: Optional[CollocationOperators] = None,
    pivot_tol: float = SolverConfig.pivot_tol,
) -> SolverState:
    """
    Advance one time step.

    Raises:
        SolverError: if M is singular or the new state is not finite
    """
    next_index = state.step_index + 1
    with np.errstate(over="ignore", invalid="ignore"):
        system = assemble(state, setup, ops)
        if not (np.all(np.isfinite(system.m)) and np.all(np.isfinite(system.r))):
            raise SolverError(next_index, "assembled system is not finite")
        try:
            factorization = lu_factor(system.m, pivot_tol)
        except SingularMatrixError as e:
            raise SolverError(next_index, f"system matrix is singular ({e})") from e
        u_next = factorization.solve(system.r)
    if not np.all(np.isfinite(u_next)):
        raise SolverError(next_index, "solution is not finite")

    # identity rows already give the boundary data; pin it bit-exactly
    u_next[0] = system.r[0]
    u_next[-1] = system.r[-1]
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"step {next_index}: cond(M) ~ {condition_estimate(system.m, factorization):.3e}")
    return SolverState(t=state.t + setup.dt, u=u_next, step_index=next_index)


# =============================================================================
# FULL RUN
# =============================================================================

def observer_steps(setup: ProblemSetup, observers: Sequence[float]) -> List[int]:
    """
    Map observer times to step counts.

    Raises:
        DomainError: for negative, late, duplicate or step-misaligned observer times
    """
    steps = []
    for t in observers:
        if t < 0:
            raise DomainError(f"observer time {t} is negative")
        k = steps_for(t, setup.dt)
        if k is None:
            raise DomainError(f"observer time {t} is not a multiple of dt={setup.dt}")
        if k > setup.n_steps:
            raise DomainError(f"observer time {t} is after t_final={setup.t_final}")
        if k in steps:
            raise DomainError(f"observer time {t} is listed twice")
        steps.append(k)
    return steps


def _observe(state: SolverState, setup: ProblemSetup, t: float) -> Snapshot:
    exact = np.asarray(exact_solution(setup.equation, setup.grid.nodes, t), dtype=float)
    return Snapshot(t=float(t), u=state.u.copy(), u_exact=exact)


def run(
    setup: ProblemSetup,
    observers: Sequence[float],
    pivot_tol: float = SolverConfig.pivot_tol,
) -> Trajectory:
    """
    March from the initial condition to t_final, recording every observer time.

    Args:
        setup: Problem to solve
        observers: Sample times, each a multiple of dt and <= t_final
        pivot_tol: Singular-pivot threshold of the per-step LU

    Returns:
        Trajectory with one snapshot and one DiagnosticsRecord per observer,
        in increasing time order

    Raises:
        DomainError: for misaligned or duplicate observer times
        SolverError: when a step fails; ``partial`` holds the trajectory so far
    """
    by_step = {k: float(t) for k, t in zip(observer_steps(setup, observers), observers)}
    ops = build_operators(setup.grid)
    trajectory = Trajectory()
    h = setup.grid.h

    def record(state: SolverState, t: float) -> None:
        snapshot = _observe(state, setup, t)
        trajectory.snapshots.append(snapshot)
        entry = make_record(t, snapshot.u, snapshot.u_exact, h)
        trajectory.records.append(entry)
        logger.info(
            f"t={t:g}: L_inf={entry.l_inf:.6g} L_2={entry.l_2:.6g} "
            f"I1={entry.i1:.6g} I2={entry.i2:.6g} I3={entry.i3:.6g}"
        )

    state = initial_state(setup)
    if 0 in by_step:
        record(state, by_step[0])

    n_steps = setup.n_steps
    progress_every = max(1, n_steps // PROGRESS_LINES)
    logger.info(f"Running {n_steps} steps of dt={setup.dt} on {setup.grid.n} nodes (theta={setup.theta})")
    for _ in range(n_steps):
        try:
            state = step(state, setup, ops, pivot_tol)
        except SolverError as e:
            trajectory.final_state = state
            e.partial = trajectory
            logger.error(str(e))
            raise
        if state.step_index in by_step:
            record(state, by_step[state.step_index])
        if state.step_index % progress_every == 0:
            logger.debug(f"step {state.step_index}/{n_steps} t={state.t:g} max|u|={np.max(np.abs(state.u)):.6g}")
    trajectory.final_state = state
    return trajectory


def consistency_residual(setup: ProblemSetup, t: float = 0.0, ops: Optional[CollocationOperators] = None) -> float:
    """
    Local truncation error of one step on the exact solution.

    Returns ||M u_ex(t + dt) - R(u_ex(t))||_inf / dt with M, R assembled at
    u_ex(t); it is O(dt^2) for theta = 0.5 and O(dt) otherwise.
    """
    nodes = setup.grid.nodes
    u_now = np.asarray(exact_solution(setup.equation, nodes, t), dtype=float)
    u_next = np.asarray(exact_solution(setup.equation, nodes, t + setup.dt), dtype=float)
    system = assemble(SolverState(t=t, u=u_now), setup, ops)
    return float(np.max(np.abs(system.m @ u_next - system.r))) / setup.dt

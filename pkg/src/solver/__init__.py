"""Theta-scheme time stepping"""
from .stepper import (
    AssembledSystem,
    Snapshot,
    SolverState,
    Trajectory,
    assemble,
    consistency_residual,
    initial_state,
    observer_steps,
    run,
    step,
)

__all__ = [
    "AssembledSystem",
    "Snapshot",
    "SolverState",
    "Trajectory",
    "assemble",
    "consistency_residual",
    "initial_state",
    "observer_steps",
    "run",
    "step",
]

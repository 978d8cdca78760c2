"""
Stability analysis of the linearized theta scheme
Amplification matrix P = (I + dt theta K)^-1 (I - dt (1 - theta) K) and its
spectral-radius verdict
"""

import sys
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np
from numpy.typing import ArrayLike

from src.config import SolverConfig
from src.exceptions import DomainError
from src.linalg import DenseMatrix, as_matrix, condition_estimate, lu_factor, spectral_radius
from src.model import CollocationOperators, ProblemSetup, linearized_operator
from src.utils import get_logger

if TYPE_CHECKING:
    from src.solver import SolverState

logger = get_logger(__name__)

DEFAULT_STABILITY_TOL = 1e-8


@dataclass(frozen=True)
class StabilityReport:
    """Spectral-radius verdict for one (theta, dt) pair"""
    rho: float
    stable: bool
    theta: float
    dt: float
    converged: bool
    # infinity-norm condition estimate of the implicit matrix, when known
    condition: Optional[float] = None

    def to_row(self) -> dict:
        return {
            "theta": self.theta,
            "dt": self.dt,
            "rho": self.rho,
            "stable": self.stable,
            "converged": self.converged,
        }

    def growth_over(self, n_steps: int) -> float:
        """rho ** n_steps, the bound on error growth over a run (inf on overflow)"""
        with np.errstate(over="ignore"):
            return float(np.power(self.rho, n_steps))


STABILITY_COLUMNS = ("theta", "dt", "rho", "stable", "converged")


def _implicit_and_explicit(state: "SolverState", setup: ProblemSetup, ops: CollocationOperators):
    k = linearized_operator(state.u, setup.equation, ops)
    # Dirichlet rows carry exact data, so errors live on interior nodes only
    k = k[1:-1, 1:-1]
    identity = np.eye(k.shape[0])
    return identity + setup.dt * setup.theta * k, identity - setup.dt * (1.0 - setup.theta) * k


def amplification_matrix(
    state: "SolverState",
    setup: ProblemSetup,
    ops: CollocationOperators,
    pivot_tol: float = SolverConfig.pivot_tol,
) -> DenseMatrix:
    """
    One-step error propagator of the scheme frozen at state.u.

    Args:
        state: Linearization point
        setup: Problem setup supplying theta, dt and the equation
        ops: Collocation operators of the setup's grid
        pivot_tol: Singular-pivot threshold for the implicit matrix

    Returns:
        (N-2) x (N-2) matrix acting on the interior unknowns

    Raises:
        SingularMatrixError: if I + dt theta K is singular
    """
    implicit, explicit = _implicit_and_explicit(state, setup, ops)
    return lu_factor(implicit, pivot_tol).solve(explicit)


def stability_check(
    p: ArrayLike,
    tol: float = DEFAULT_STABILITY_TOL,
    theta: float = float("nan"),
    dt: float = float("nan"),
    iters: int = SolverConfig.power_iters,
    power_tol: float = SolverConfig.power_tol,
    seed: int = SolverConfig.power_seed,
    condition: Optional[float] = None,
) -> StabilityReport:
    """
    Estimate rho(p) and compare it with 1 + tol.

    Only a converged estimate can be judged stable; an unconverged one is
    reported with stable=False and converged=False.
    """
    p = as_matrix(p, "amplification matrix")
    rho, converged = spectral_radius(p, iters=iters, tol=power_tol, seed=seed)
    if not converged:
        logger.warning(f"Spectral radius estimate did not converge after {iters} restarts (rho ~ {rho:.6g})")
    return StabilityReport(
        rho=rho,
        stable=converged and rho <= 1.0 + tol,
        theta=theta,
        dt=dt,
        converged=converged,
        condition=condition,
    )


def assess_stability(
    state: "SolverState",
    setup: ProblemSetup,
    ops: CollocationOperators,
    config: Optional[SolverConfig] = None,
) -> StabilityReport:
    """Build P at state and return its verdict together with a condition estimate"""
    config = config or SolverConfig()
    implicit, explicit = _implicit_and_explicit(state, setup, ops)
    factorization = lu_factor(implicit, config.pivot_tol)
    p = factorization.solve(explicit)
    report = stability_check(
        p,
        tol=config.stability_tol,
        theta=setup.theta,
        dt=setup.dt,
        iters=config.power_iters,
        power_tol=config.power_tol,
        seed=config.power_seed,
        condition=condition_estimate(implicit, factorization),
    )
    logger.info(
        f"Stability theta={setup.theta} dt={setup.dt}: rho={report.rho:.6g} "
        f"({'stable' if report.stable else 'unstable'}, converged={report.converged})"
    )
    return report


def eigenvalue_condition(lh: complex, lk: complex, theta: float, dt: float) -> bool:
    """
    Per-eigenvalue bound |lh - dt (1 - theta) lk| <= |lh + dt theta lk|.

    At theta = 0.5 this reduces to Re(lh) Re(lk) + Im(lh) Im(lk) >= 0.

    Raises:
        DomainError: if lh + dt theta lk vanishes
    """
    numerator = abs(lh - dt * (1.0 - theta) * lk)
    denominator = abs(lh + dt * theta * lk)
    if denominator == 0.0:
        raise DomainError("eigenvalue condition has a zero denominator")
    # equality cases must survive rounding
    slack = 8 * sys.float_info.epsilon * max(numerator, denominator)
    return numerator <= denominator + slack

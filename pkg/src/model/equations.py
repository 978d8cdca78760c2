"""
PDE family, exact solutions and initial/boundary data

Unified equation u_t + eps u^p u_x - nu u_xx + mu u_xxx = 0; the KdV
soliton and the KdV-Burgers shock profile serve as exact solutions.
"""

from dataclasses import dataclass
from enum import Enum
from math import isclose
from typing import Tuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import DomainError
from src.sinc import Grid

RealOrArray = Union[float, NDArray[np.float64]]

STEP_ALIGNMENT_RTOL = 1e-9
EXACTNESS_RTOL = 1e-5
# exp(2 * 350) is still finite in double precision
_SECH_CLAMP = 350.0


class EquationKind(Enum):
    """Selects which exact solution accompanies the equation"""
    KDV = "kdv"
    KDVB = "kdvb"


@dataclass(frozen=True)
class EquationSpec:
    """Coefficients of u_t + eps u^p u_x - nu u_xx + mu u_xxx = 0"""
    epsilon: float
    nu: float
    mu: float
    kind: EquationKind
    power: int = 1

    def __post_init__(self) -> None:
        if self.nu < 0:
            raise DomainError(f"diffusion nu must be >= 0, got {self.nu}")
        if self.kind is EquationKind.KDV and self.nu != 0:
            raise DomainError("KdV requires nu = 0")
        if self.kind is EquationKind.KDVB and self.mu == 0:
            raise DomainError("KdV-Burgers exact solution requires mu != 0")
        if int(self.power) != self.power or self.power < 1:
            raise DomainError(f"nonlinearity power must be a positive integer, got {self.power}")

    @classmethod
    def kdv(cls, epsilon: float = 6.0, mu: float = 1.0) -> "EquationSpec":
        return cls(epsilon=epsilon, nu=0.0, mu=mu, kind=EquationKind.KDV)

    @classmethod
    def kdvb(cls, epsilon: float, nu: float, mu: float) -> "EquationSpec":
        return cls(epsilon=epsilon, nu=nu, mu=mu, kind=EquationKind.KDVB)


@dataclass(frozen=True)
class ProblemSetup:
    """Equation, grid and theta-scheme parameters of one experiment"""
    equation: EquationSpec
    grid: Grid
    theta: float
    dt: float
    t_final: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= 1.0:
            raise DomainError(f"theta must lie in [0, 1], got {self.theta}")
        if not self.dt > 0:
            raise DomainError(f"time step must be positive, got {self.dt}")
        if not self.t_final > 0:
            raise DomainError(f"final time must be positive, got {self.t_final}")
        if steps_for(self.t_final, self.dt) is None:
            raise DomainError(f"t_final={self.t_final} is not a whole number of steps of dt={self.dt}")

    @property
    def n_steps(self) -> int:
        return int(round(self.t_final / self.dt))


def steps_for(t: float, dt: float) -> Union[int, None]:
    """Number of dt steps that reach t, or None when t is not step-aligned"""
    ratio = t / dt
    steps = round(ratio)
    if isclose(ratio, steps, rel_tol=STEP_ALIGNMENT_RTOL, abs_tol=STEP_ALIGNMENT_RTOL):
        return int(steps)
    return None


# =============================================================================
# EXACT SOLUTIONS
# =============================================================================

def sech2(xi: ArrayLike) -> RealOrArray:
    """sech^2 computed as 4 / (e^xi + e^-xi)^2 with the exponent clamped"""
    xi = np.clip(np.asarray(xi, dtype=float), -_SECH_CLAMP, _SECH_CLAMP)
    values = 4.0 / (np.exp(xi) + np.exp(-xi)) ** 2
    return float(values) if values.ndim == 0 else values


def exact_kdv(x: ArrayLike, t: ArrayLike) -> RealOrArray:
    """Soliton 0.5 sech^2(0.5 (x - t)) of u_t + 6 u u_x + u_xxx = 0"""
    return 0.5 * sech2(0.5 * (np.asarray(x, dtype=float) - np.asarray(t, dtype=float)))


def kdvb_parameters(eq: EquationSpec) -> Tuple[float, float, float]:
    """Amplitude factor -6 nu^2 / (25 mu), wavenumber nu / (10 mu) and drift speed"""
    if eq.mu == 0:
        raise DomainError("KdV-Burgers exact solution requires mu != 0")
    speed = 6.0 * eq.nu ** 2 / (25.0 * eq.mu)
    return -speed, eq.nu / (10.0 * eq.mu), speed


def exact_kdvb(x: ArrayLike, t: ArrayLike, eq: EquationSpec) -> RealOrArray:
    """
    Shock profile (-6 nu^2 / 25 mu) [1 + tanh(xi) - sech^2(xi) / 2],
    xi = (nu / 10 mu)(x + (6 nu^2 / 25 mu) t).
    """
    if eq.kind is not EquationKind.KDVB:
        raise DomainError("exact_kdvb needs a KdV-Burgers equation")
    amplitude, wavenumber, speed = kdvb_parameters(eq)
    xi = wavenumber * (np.asarray(x, dtype=float) + speed * np.asarray(t, dtype=float))
    return amplitude * (1.0 + np.tanh(xi) - 0.5 * np.asarray(sech2(xi)))


def exact_solution(eq: EquationSpec, x: ArrayLike, t: ArrayLike) -> RealOrArray:
    """Exact solution selected by the equation kind"""
    if eq.kind is EquationKind.KDV:
        return exact_kdv(x, t)
    return exact_kdvb(x, t, eq)


def initial_condition(setup: ProblemSetup) -> NDArray[np.float64]:
    """Exact solution sampled at t = 0 on the grid nodes"""
    return np.asarray(exact_solution(setup.equation, setup.grid.nodes, 0.0), dtype=float)


def boundary_values(setup: ProblemSetup, t: float) -> Tuple[float, float]:
    """Dirichlet data (g_a(t), g_b(t)) taken from the exact solution"""
    if t < 0:
        raise DomainError(f"boundary time must be >= 0, got {t}")
    ends = np.asarray(exact_solution(setup.equation, [setup.grid.a, setup.grid.b], t))
    return float(ends[0]), float(ends[1])


# =============================================================================
# RESIDUAL CHECK
# =============================================================================

def central_difference_weights(derivative: int, half_width: int) -> NDArray[np.float64]:
    """
    Central finite-difference weights on offsets -half_width..half_width.

    Solves the moment conditions sum_k w_k k^m = derivative! delta_{m,derivative};
    the derivative is then sum_k w_k f(x + k delta) / delta^derivative.
    """
    if half_width < 1 or 2 * half_width + 1 <= derivative:
        raise DomainError("stencil too narrow for the requested derivative")
    offsets = np.arange(-half_width, half_width + 1, dtype=float)
    moments = np.vander(offsets, increasing=True).T
    target = np.zeros(offsets.size)
    target[derivative] = float(np.prod(np.arange(1, derivative + 1)))
    return np.linalg.solve(moments, target)


def characteristic_length(eq: EquationSpec) -> float:
    """Length scale over which the exact solution varies"""
    if eq.kind is EquationKind.KDV:
        return 2.0
    return abs(10.0 * eq.mu / eq.nu) if eq.nu else 1.0


def _derivative(eq: EquationSpec, x: NDArray, t: NDArray, order: int, axis: str, step: float) -> NDArray:
    weights = central_difference_weights(order, 3)
    total = np.zeros(np.broadcast(x, t).shape)
    for k, w in zip(range(-3, 4), weights):
        if w == 0:
            continue
        if axis == "x":
            total = total + w * np.asarray(exact_solution(eq, x + k * step, t))
        else:
            total = total + w * np.asarray(exact_solution(eq, x, t + k * step))
    return total / step ** order


@dataclass(frozen=True)
class ExactnessReport:
    """How well the exact solution satisfies the discretized equation"""
    max_residual: float
    max_relative_residual: float
    is_exact: bool


def exactness_check(
    eq: EquationSpec,
    x: ArrayLike,
    t: ArrayLike,
    rtol: float = EXACTNESS_RTOL,
) -> ExactnessReport:
    """
    Plug the exact solution into the PDE using 6th-order central differences.

    The relative residual divides by the largest single term over all
    sample points, so profiles of tiny amplitude are judged on the balance
    of terms rather than on their absolute size.
    """
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    step = 1e-2 * characteristic_length(eq)
    if eq.kind is EquationKind.KDVB:
        # time derivative resolved on the drift time scale
        _, wavenumber, speed = kdvb_parameters(eq)
        t_step = 1e-2 / abs(wavenumber * speed) if speed else step
    else:
        t_step = step

    u = np.asarray(exact_solution(eq, x, t))
    terms = np.stack([
        _derivative(eq, x, t, 1, "t", t_step),
        eq.epsilon * u ** eq.power * _derivative(eq, x, t, 1, "x", step),
        -eq.nu * _derivative(eq, x, t, 2, "x", step),
        eq.mu * _derivative(eq, x, t, 3, "x", step),
    ])
    residual = np.abs(terms.sum(axis=0))
    scale = float(np.max(np.abs(terms)))
    max_relative = float(np.max(residual)) / scale if scale > 0 else 0.0
    return ExactnessReport(
        max_residual=float(np.max(residual)),
        max_relative_residual=max_relative,
        is_exact=max_relative <= rtol,
    )

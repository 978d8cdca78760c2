"""
Collocation operators
Derivative matrices of a grid and the spatial operator
eps u^p u_x - nu u_xx + mu u_xxx with its Jacobian
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import ShapeMismatchError
from src.sinc import DerivativeMatrix, Grid, derivative_matrix

from .equations import EquationSpec


@dataclass(frozen=True)
class CollocationOperators:
    """First, second and third order sinc differentiation matrices of one grid"""
    d1: DerivativeMatrix
    d2: DerivativeMatrix
    d3: DerivativeMatrix

    @property
    def n(self) -> int:
        return self.d1.n


@lru_cache(maxsize=32)
def build_operators(grid: Grid) -> CollocationOperators:
    """Differentiation matrices for a grid; cached since grids are immutable"""
    return CollocationOperators(
        d1=derivative_matrix(grid, 1),
        d2=derivative_matrix(grid, 2),
        d3=derivative_matrix(grid, 3),
    )


def _state(u: ArrayLike, ops: CollocationOperators) -> NDArray[np.float64]:
    u = np.asarray(u, dtype=float)
    if u.shape != (ops.n,):
        raise ShapeMismatchError(f"state has shape {u.shape}, operators expect ({ops.n},)")
    return u


def spatial_operator(u: ArrayLike, eq: EquationSpec, ops: CollocationOperators) -> NDArray[np.float64]:
    """Evaluate eps u^p (D1 u) - nu D2 u + mu D3 u at every node"""
    u = _state(u, ops)
    return (
        eq.epsilon * u ** eq.power * (ops.d1 @ u)
        - eq.nu * (ops.d2 @ u)
        + eq.mu * (ops.d3 @ u)
    )


def linearized_operator(u: ArrayLike, eq: EquationSpec, ops: CollocationOperators) -> NDArray[np.float64]:
    """
    Jacobian of spatial_operator frozen at u.

    eps [diag(u^p) D1 + diag(p u^(p-1) D1 u)] - nu D2 + mu D3
    """
    u = _state(u, ops)
    p = eq.power
    advection = (u ** p)[:, np.newaxis] * ops.d1.entries
    advection[np.diag_indices_from(advection)] += p * u ** (p - 1) * (ops.d1 @ u)
    return eq.epsilon * advection - eq.nu * ops.d2.entries + eq.mu * ops.d3.entries

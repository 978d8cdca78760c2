"""
Sinc cardinal basis on a uniform grid
Translated sinc functions, cardinal interpolation and exact collocation
differentiation matrices of any order
"""

from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.linalg import toeplitz

from src.exceptions import DomainError, ShapeMismatchError

MIN_NODES = 4
CLOSED_FORM_ORDERS = (0, 1, 2, 3)
# Alternating factorial sums lose digits quickly past this order
MAX_GENERAL_ORDER = 8

RealOrArray = Union[float, NDArray[np.float64]]


def sinc(x: ArrayLike) -> RealOrArray:
    """
    Normalized sinc, sin(pi x) / (pi x) with value 1 at the origin.

    Accepts scalars or arrays; scalars come back as plain floats.
    """
    values = np.sinc(np.asarray(x, dtype=float))
    return float(values) if values.ndim == 0 else values


# =============================================================================
# GRID
# =============================================================================

@dataclass(frozen=True)
class Grid:
    """Uniform collocation grid x_i = a + (i-1) h, i = 1..N, on [a, b]"""
    a: float
    b: float
    n: int

    def __post_init__(self) -> None:
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise DomainError("grid endpoints must be finite")
        if self.a >= self.b:
            raise DomainError(f"grid needs a < b, got a={self.a}, b={self.b}")
        if self.n < MIN_NODES:
            raise DomainError(f"grid needs at least {MIN_NODES} nodes, got n={self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / (self.n - 1)

    @cached_property
    def nodes(self) -> NDArray[np.float64]:
        # linspace pins both endpoints exactly
        nodes = np.linspace(self.a, self.b, self.n)
        nodes.setflags(write=False)
        return nodes

    def __len__(self) -> int:
        return self.n


def make_grid(a: float, b: float, n: int) -> Grid:
    """
    Build a uniform grid with n nodes on [a, b].

    Raises:
        DomainError: if a >= b or n < 4
    """
    return Grid(float(a), float(b), int(n))


def _check_index(grid: Grid, j: int) -> None:
    if not 1 <= j <= grid.n:
        raise DomainError(f"basis index {j} outside 1..{grid.n}")


def basis_value(grid: Grid, j: int, x: ArrayLike) -> RealOrArray:
    """
    Value of the j-th translated sinc S_j(x) = sinc((x - x_j) / h).

    Indices are 1-based to match the node numbering.
    """
    _check_index(grid, j)
    return sinc((np.asarray(x, dtype=float) - grid.nodes[j - 1]) / grid.h)


def cardinal_interpolate(grid: Grid, coeffs: ArrayLike, x: ArrayLike) -> RealOrArray:
    """
    Evaluate the truncated cardinal expansion sum_j c_j S_j(x).

    Args:
        grid: Collocation grid
        coeffs: N nodal coefficients
        x: Evaluation point(s)

    Returns:
        Interpolant value(s); exactly coeffs[i] at node i
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape != (grid.n,):
        raise ShapeMismatchError(f"expected {grid.n} coefficients, got shape {coeffs.shape}")
    x = np.asarray(x, dtype=float)
    scaled = (x[..., np.newaxis] - grid.nodes) / grid.h
    values = np.sinc(scaled) @ coeffs
    return float(values) if values.ndim == 0 else values


# =============================================================================
# DIFFERENTIATION MATRICES
# =============================================================================

@dataclass(frozen=True, eq=False)
class DerivativeMatrix:
    """
    N x N sinc differentiation matrix of a given order.

    Entry (i, j) is the order-th derivative of S_j evaluated at node i.
    """
    order: int
    grid_spacing: float
    entries: NDArray[np.float64]

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def apply(self, values: ArrayLike) -> NDArray[np.float64]:
        values = np.asarray(values, dtype=float)
        if values.shape[0] != self.n:
            raise ShapeMismatchError(f"expected {self.n} nodal values, got {values.shape[0]}")
        return self.entries @ values

    def __matmul__(self, other: ArrayLike) -> NDArray[np.float64]:
        return self.apply(other)


def _from_offsets(grid: Grid, order: int, column: NDArray[np.float64]) -> DerivativeMatrix:
    # column[k] holds the unit-spacing derivative at offset i - j = k >= 0;
    # odd orders are antisymmetric in k, even orders symmetric
    row = column if order % 2 == 0 else -column
    entries = toeplitz(column, row) / grid.h ** order
    entries.setflags(write=False)
    return DerivativeMatrix(order=order, grid_spacing=grid.h, entries=entries)


def derivative_matrix(grid: Grid, r: int) -> DerivativeMatrix:
    """
    Closed-form sinc differentiation matrix for r in {0, 1, 2, 3}.

    With k = i - j != 0 and unit spacing the entries are
    r=1: (-1)^k / k, r=2: -2 (-1)^k / k^2, r=3: (-1)^k (6 - pi^2 k^2) / k^3,
    with diagonals 0, -pi^2/3, 0; everything scales by h^-r.

    Raises:
        DomainError: for r outside {0, 1, 2, 3}
    """
    if r not in CLOSED_FORM_ORDERS:
        raise DomainError(f"closed-form derivative order must be one of {CLOSED_FORM_ORDERS}, got {r}")

    k = np.arange(grid.n, dtype=float)
    column = np.zeros(grid.n)
    off = k[1:]
    sign = np.where(np.arange(1, grid.n) % 2 == 0, 1.0, -1.0)
    if r == 0:
        column[0] = 1.0
    elif r == 1:
        column[1:] = sign / off
    elif r == 2:
        column[0] = -np.pi ** 2 / 3.0
        column[1:] = -2.0 * sign / off ** 2
    else:
        column[1:] = sign * (6.0 - np.pi ** 2 * off ** 2) / off ** 3
    return _from_offsets(grid, r, column)


def sinc_derivative_at_integer(order: int, k: int) -> float:
    """
    order-th derivative of sinc at the integer k.

    Uses the finite sums obtained by Leibniz-differentiating
    sin(pi x) * (pi x)^-1: for k != 0

        (-1)^(k+order-1) / k^order * sum_l (-1)^l order!/(2l+1)! (pi k)^(2l)

    over 0 <= 2l+1 <= order, and (-1)^(order/2) pi^order / (order+1) at k = 0
    for even order (zero for odd order).
    """
    if k == 0:
        if order % 2:
            return 0.0
        return (-1) ** (order // 2) * np.pi ** order / (order + 1)
    total = 0.0
    for l in range((order - 1) // 2 + 1):
        total += (-1) ** l * factorial(order) / factorial(2 * l + 1) * (np.pi * k) ** (2 * l)
    return (-1) ** ((k + order - 1) % 2) * total / k ** order


def derivative_matrix_general(grid: Grid, r: int) -> DerivativeMatrix:
    """
    Sinc differentiation matrix of any order 0 <= r <= 8 from the general
    even/odd summation formulas.

    Raises:
        DomainError: for negative r or r above the practical cap
    """
    if not 0 <= r <= MAX_GENERAL_ORDER:
        raise DomainError(f"derivative order must lie in 0..{MAX_GENERAL_ORDER}, got {r}")
    column = np.array([sinc_derivative_at_integer(r, k) for k in range(grid.n)])
    return _from_offsets(grid, r, column)

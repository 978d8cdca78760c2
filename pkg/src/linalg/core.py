"""
Dense linear algebra kernels
LU solves, shape-checked products and spectral-radius estimation
"""

import sys
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg as la
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigs

from src.exceptions import ShapeMismatchError, SingularMatrixError

DenseMatrix = NDArray[np.float64]
Vector = NDArray[np.float64]

DEFAULT_PIVOT_TOL = 64 * sys.float_info.epsilon

# ARPACK needs k + 1 < ncv <= n with k = 1
MIN_ARNOLDI_SIZE = 3
MAX_KRYLOV_DIM = 128


def as_matrix(a: ArrayLike, name: str = "matrix") -> DenseMatrix:
    """Coerce to a finite 2-D float array"""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise ShapeMismatchError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def as_vector(v: ArrayLike, name: str = "vector") -> Vector:
    """Coerce to a 1-D float array"""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ShapeMismatchError(f"{name} must be 1-D, got shape {arr.shape}")
    return arr


def _require_square(a: DenseMatrix) -> int:
    rows, cols = a.shape
    if rows != cols:
        raise ShapeMismatchError(f"expected a square matrix, got {rows}x{cols}")
    return rows


# =============================================================================
# PRODUCTS
# =============================================================================

def matvec(a: ArrayLike, v: ArrayLike) -> Vector:
    """Matrix-vector product with shape checking"""
    a = as_matrix(a)
    v = as_vector(v)
    if a.shape[1] != v.shape[0]:
        raise ShapeMismatchError(f"cannot multiply {a.shape} matrix by length-{v.shape[0]} vector")
    return a @ v


def matmul(a: ArrayLike, b: ArrayLike) -> DenseMatrix:
    """Matrix-matrix product with shape checking"""
    a = as_matrix(a, "left operand")
    b = as_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def diag_from_vector(v: ArrayLike) -> DenseMatrix:
    """Diagonal matrix whose diagonal is v"""
    return np.diag(as_vector(v))


def elementwise_product(u: ArrayLike, w: ArrayLike) -> Vector:
    """Hadamard product u ∘ w of two equal-length vectors"""
    u = as_vector(u)
    w = as_vector(w)
    if u.shape != w.shape:
        raise ShapeMismatchError(f"length mismatch: {u.shape[0]} vs {w.shape[0]}")
    return u * w


# =============================================================================
# LU FACTORIZATION
# =============================================================================

@dataclass(frozen=True, eq=False)
class LUFactorization:
    """
    Partial-pivoting LU factors in LAPACK's combined storage.

    ``lu`` holds U on and above the diagonal and the unit-lower L below it;
    row i was interchanged with row ``piv[i]`` during elimination.
    """
    lu: DenseMatrix
    piv: NDArray[np.int32]
    sign: int

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    def lower(self) -> DenseMatrix:
        return np.tril(self.lu, k=-1) + np.eye(self.n)

    def upper(self) -> DenseMatrix:
        return np.triu(self.lu)

    def permutation(self) -> NDArray[np.intp]:
        """Row order such that ``a[perm] == L @ U``"""
        perm = np.arange(self.n)
        for i, p in enumerate(self.piv):
            perm[i], perm[p] = perm[p], perm[i]
        return perm

    def solve(self, rhs: ArrayLike) -> NDArray[np.float64]:
        rhs = np.asarray(rhs, dtype=float)
        if rhs.shape[0] != self.n:
            raise ShapeMismatchError(f"rhs length {rhs.shape[0]} does not match {self.n}x{self.n} system")
        return la.lu_solve((self.lu, self.piv), rhs, check_finite=False)


def lu_factor(a: ArrayLike, pivot_tol: float = DEFAULT_PIVOT_TOL) -> LUFactorization:
    """
    Factor a square matrix with partial pivoting.

    Args:
        a: Square matrix
        pivot_tol: Pivots with ``|u_kk| <= pivot_tol * ||a||_inf`` count as zero

    Returns:
        LUFactorization of a

    Raises:
        SingularMatrixError: carrying the index of the first vanishing pivot
    """
    a = as_matrix(a)
    n = _require_square(a)
    with warnings.catch_warnings():
        # scipy warns on exactly-zero pivots; the check below raises instead
        warnings.simplefilter("ignore", la.LinAlgWarning)
        lu, piv = la.lu_factor(a, check_finite=False)

    scale = np.linalg.norm(a, ord=np.inf)
    pivots = np.abs(np.diag(lu))
    small = np.flatnonzero(pivots <= pivot_tol * max(scale, np.finfo(float).tiny))
    if small.size:
        raise SingularMatrixError(int(small[0]))

    swaps = int(np.count_nonzero(piv != np.arange(n)))
    return LUFactorization(lu=lu, piv=piv, sign=-1 if swaps % 2 else 1)


def lu_solve(a: ArrayLike, rhs: ArrayLike, pivot_tol: float = DEFAULT_PIVOT_TOL) -> Vector:
    """Solve ``a x = rhs`` by dense LU with partial pivoting"""
    a = as_matrix(a)
    rhs = as_vector(rhs, "rhs")
    n = _require_square(a)
    if rhs.shape[0] != n:
        raise ShapeMismatchError(f"rhs length {rhs.shape[0]} does not match {n}x{n} system")
    return lu_factor(a, pivot_tol).solve(rhs)


def condition_estimate(
    a: ArrayLike,
    factorization: Optional[LUFactorization] = None,
    samples: int = 4,
    seed: int = 0,
) -> float:
    """
    Cheap infinity-norm condition estimate ``||A|| * max ||A^-1 e|| / ||e||``.

    The probes are the all-ones vector plus fixed-seed random sign vectors,
    so the value is a lower bound on the true condition number.
    """
    a = as_matrix(a)
    n = _require_square(a)
    factorization = factorization or lu_factor(a)
    rng = np.random.default_rng(seed)
    probes = [np.ones(n)] + [rng.choice([-1.0, 1.0], size=n) for _ in range(samples - 1)]
    inverse_norm = max(np.linalg.norm(factorization.solve(e), ord=np.inf) for e in probes)
    return float(np.linalg.norm(a, ord=np.inf) * inverse_norm)


# =============================================================================
# SPECTRAL RADIUS
# =============================================================================

def spectral_radius(
    a: ArrayLike,
    iters: int = 500,
    tol: float = 1e-10,
    seed: int = 0,
    subspace: Optional[int] = None,
) -> Tuple[float, bool]:
    """
    Estimate max |lambda_i| by implicitly restarted Arnoldi iteration.

    The Krylov subspace is built from a fixed-seed random start and the
    largest-magnitude Ritz value is returned. Amplification matrices keep
    many eigenvalues close to the unit circle, so the subspace has to be
    wide: by default it spans min(n, MAX_KRYLOV_DIM) vectors. Triangular
    matrices and matrices below ARPACK's minimum size are read off directly.

    Args:
        a: Square matrix
        iters: Maximum number of Arnoldi restarts (>= 1)
        tol: Relative accuracy required of the dominant Ritz value
        seed: Seed of the random starting vector
        subspace: Krylov subspace dimension, clipped to [3, n]

    Returns:
        Tuple of (estimated spectral radius, converged flag); an estimate
        that did not converge is the best Ritz value so far, or NaN when
        ARPACK produced none
    """
    a = as_matrix(a)
    n = _require_square(a)
    if iters < 1:
        raise ValueError("iters must be >= 1")
    if n == 0:
        return 0.0, True
    if not np.any(np.tril(a, -1)) or not np.any(np.triu(a, 1)):
        return float(np.max(np.abs(np.diag(a)))), True
    if n < MIN_ARNOLDI_SIZE:
        return float(np.max(np.abs(np.linalg.eigvals(a)))), True

    ncv = min(n, max(MIN_ARNOLDI_SIZE, subspace or MAX_KRYLOV_DIM))
    v0 = np.random.default_rng(seed).standard_normal(n)
    try:
        ritz = eigs(a, k=1, which="LM", ncv=ncv, maxiter=iters, tol=tol, v0=v0, return_eigenvectors=False)
    except ArpackNoConvergence as e:
        partial = np.asarray(e.eigenvalues)
        return (float(np.max(np.abs(partial))) if partial.size else float("nan")), False
    except ArpackError:
        return float("nan"), False
    return float(np.max(np.abs(ritz))), True

"""Dense linear algebra kernels"""
from .core import (
    DenseMatrix,
    LUFactorization,
    Vector,
    as_matrix,
    condition_estimate,
    diag_from_vector,
    elementwise_product,
    lu_factor,
    lu_solve,
    matmul,
    matvec,
    spectral_radius,
)

__all__ = [
    "DenseMatrix",
    "LUFactorization",
    "Vector",
    "as_matrix",
    "condition_estimate",
    "diag_from_vector",
    "elementwise_product",
    "lu_factor",
    "lu_solve",
    "matmul",
    "matvec",
    "spectral_radius",
]

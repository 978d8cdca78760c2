"""Sinc cardinal basis and collocation differentiation matrices"""
from .basis import (
    MAX_GENERAL_ORDER,
    MIN_NODES,
    DerivativeMatrix,
    Grid,
    basis_value,
    cardinal_interpolate,
    derivative_matrix,
    derivative_matrix_general,
    make_grid,
    sinc,
    sinc_derivative_at_integer,
)

__all__ = [
    "MAX_GENERAL_ORDER",
    "MIN_NODES",
    "DerivativeMatrix",
    "Grid",
    "basis_value",
    "cardinal_interpolate",
    "derivative_matrix",
    "derivative_matrix_general",
    "make_grid",
    "sinc",
    "sinc_derivative_at_integer",
]

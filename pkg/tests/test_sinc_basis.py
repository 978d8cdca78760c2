"""
Tests for the sinc basis and differentiation matrices
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from src.exceptions import DomainError, ShapeMismatchError
from src.model import central_difference_weights
from src.sinc import (
    MAX_GENERAL_ORDER,
    basis_value,
    cardinal_interpolate,
    derivative_matrix,
    derivative_matrix_general,
    make_grid,
    sinc,
    sinc_derivative_at_integer,
)

grids = st.builds(
    make_grid,
    st.floats(min_value=-50.0, max_value=0.0),
    st.floats(min_value=1.0, max_value=50.0),
    st.integers(min_value=4, max_value=40),
)


# =============================================================================
# SINC AND GRID
# =============================================================================

def test_sinc_values():
    assert sinc(0.0) == 1.0
    assert sinc(0.5) == pytest.approx(2.0 / np.pi)
    assert_allclose(sinc(np.arange(1, 20)), 0.0, atol=1e-15)


@given(st.floats(min_value=-1e3, max_value=1e3))
def test_sinc_even_and_bounded(x):
    assert sinc(x) == pytest.approx(sinc(-x), abs=1e-15)
    assert abs(sinc(x)) <= 1.0


def test_make_grid_table1_configuration():
    grid = make_grid(-15, 15, 100)
    assert grid.h == pytest.approx(30.0 / 99.0)
    assert grid.nodes[0] == -15.0
    assert grid.nodes[-1] == 15.0
    assert len(grid) == 100


def test_make_grid_unit_spacing():
    grid = make_grid(0, 3, 4)
    assert grid.h == 1.0
    assert_array_equal(grid.nodes, [0.0, 1.0, 2.0, 3.0])


@pytest.mark.parametrize("a,b,n", [(0.0, 1.0, 2), (0.0, 1.0, 3), (1.0, 1.0, 10), (2.0, 1.0, 10)])
def test_make_grid_rejects_bad_input(a, b, n):
    with pytest.raises(DomainError):
        make_grid(a, b, n)


@given(grids)
def test_grid_is_uniform(grid):
    spacing = np.diff(grid.nodes)
    assert np.all(spacing > 0)
    assert np.max(np.abs(spacing - grid.h)) <= 8 * np.finfo(float).eps * (grid.b - grid.a)


def test_grid_nodes_are_read_only():
    grid = make_grid(0, 1, 5)
    with pytest.raises(ValueError):
        grid.nodes[0] = 3.0


# =============================================================================
# BASIS AND INTERPOLATION
# =============================================================================

def test_basis_value_cardinality():
    grid = make_grid(0, 3, 4)
    assert basis_value(grid, 2, 1.0) == 1.0
    assert basis_value(grid, 2, 3.0) == pytest.approx(0.0, abs=1e-15)
    assert basis_value(grid, 1, 0.5) == pytest.approx(2.0 / np.pi)


@pytest.mark.parametrize("j", [0, 5])
def test_basis_value_rejects_out_of_range_index(j):
    with pytest.raises(DomainError):
        basis_value(make_grid(0, 3, 4), j, 0.0)


def test_cardinal_interpolate_reproduces_coefficients():
    grid = make_grid(-2, 5, 12)
    coeffs = np.random.default_rng(3).standard_normal(12)
    assert cardinal_interpolate(grid, coeffs, grid.nodes[4]) == pytest.approx(coeffs[4], abs=1e-14)
    assert_allclose(cardinal_interpolate(grid, coeffs, grid.nodes), coeffs, atol=1e-14)
    assert cardinal_interpolate(grid, np.zeros(12), 0.37) == 0.0


def test_cardinal_interpolate_soliton_profile():
    grid = make_grid(-15, 15, 100)
    profile = lambda x: 0.5 / np.cosh(0.5 * x) ** 2
    value = cardinal_interpolate(grid, profile(grid.nodes), 0.1)
    assert value == pytest.approx(profile(0.1), abs=1e-6)


def test_cardinal_interpolate_rejects_wrong_length():
    with pytest.raises(ShapeMismatchError):
        cardinal_interpolate(make_grid(0, 1, 5), np.ones(4), 0.5)


# =============================================================================
# DIFFERENTIATION MATRICES
# =============================================================================

def test_closed_form_entries():
    grid = make_grid(0, 9, 10)
    assert_array_equal(derivative_matrix(grid, 0).entries, np.eye(10))
    assert derivative_matrix(grid, 2).entries[3, 3] == pytest.approx(-np.pi ** 2 / 3.0)
    assert derivative_matrix(grid, 1).entries[4, 3] == pytest.approx(-1.0)
    assert derivative_matrix(grid, 1).entries[3, 4] == pytest.approx(1.0)
    assert derivative_matrix(grid, 3).entries[4, 3] == pytest.approx(np.pi ** 2 - 6.0)


@pytest.mark.parametrize("r", [-1, 4])
def test_closed_form_rejects_unsupported_order(r):
    with pytest.raises(DomainError):
        derivative_matrix(make_grid(0, 1, 5), r)


@settings(max_examples=30, deadline=None)
@given(grids)
def test_parity_and_toeplitz(grid):
    for r in (1, 2, 3):
        d = derivative_matrix(grid, r).entries
        if r % 2:
            assert_array_equal(d, -d.T)
            assert_array_equal(np.diag(d), 0.0)
        else:
            assert_array_equal(d, d.T)
            assert_allclose(np.diag(d), -np.pi ** 2 / (3 * grid.h ** 2))
        # constant along every diagonal
        for offset in range(-grid.n + 1, grid.n):
            band = np.diagonal(d, offset)
            assert_array_equal(band, band[0])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_scaling_with_spacing(r):
    unit = derivative_matrix(make_grid(0, 1, 12), r).entries
    double = derivative_matrix(make_grid(0, 2, 12), r).entries
    assert_allclose(double, unit * 2.0 ** -r, rtol=1e-13, atol=1e-13 * np.max(np.abs(unit)))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_matches_finite_differences_of_interpolant(r):
    grid = make_grid(0, 3, 16)
    coeffs = np.random.default_rng(r).uniform(-1, 1, grid.n)
    exact = derivative_matrix(grid, r) @ coeffs

    delta = grid.h / 25
    weights = central_difference_weights(r, 4)
    offsets = np.arange(-4, 5)
    interior = grid.nodes[3:-3]
    samples = np.stack([cardinal_interpolate(grid, coeffs, interior + k * delta) for k in offsets])
    approx = weights @ samples / delta ** r

    assert_allclose(approx, exact[3:-3], rtol=0, atol=1e-6 * np.max(np.abs(exact)))


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_general_formula_matches_closed_form(r):
    grid = make_grid(-3, 4, 10)
    closed = derivative_matrix(grid, r).entries
    general = derivative_matrix_general(grid, r).entries
    assert_allclose(general, closed, rtol=0, atol=4 * np.finfo(float).eps * np.max(np.abs(closed)))


def test_general_formula_even_diagonal():
    grid = make_grid(0, 7, 8)
    for r in (2, 4, 6, 8):
        d = derivative_matrix_general(grid, r).entries
        assert d[0, 0] == pytest.approx((-1) ** (r // 2) * np.pi ** r / (r + 1))


def test_general_formula_order_cap():
    grid = make_grid(0, 1, 5)
    derivative_matrix_general(grid, MAX_GENERAL_ORDER)
    with pytest.raises(DomainError):
        derivative_matrix_general(grid, MAX_GENERAL_ORDER + 1)


def test_fourth_derivative_at_one():
    # d^4/dx^4 sinc at x = 1 is -4 (pi^2 - 6)
    assert sinc_derivative_at_integer(4, 1) == pytest.approx(-4.0 * (np.pi ** 2 - 6.0))


def test_apply_rejects_wrong_length():
    d1 = derivative_matrix(make_grid(0, 1, 6), 1)
    with pytest.raises(ShapeMismatchError):
        d1.apply(np.ones(5))

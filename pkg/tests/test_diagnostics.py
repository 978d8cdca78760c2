"""
Tests for error norms, conservation invariants and stability analysis
"""

from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.analysis import (
    amplification_matrix,
    assess_stability,
    cubic_invariant,
    eigenvalue_condition,
    error_norms,
    invariants,
    make_record,
    stability_check,
)
from src.exceptions import DomainError, ShapeMismatchError, SolverError
from src.model import EquationKind, EquationSpec, ProblemSetup, build_operators
from src.sinc import make_grid
from src.solver import SolverState, initial_state, run


# =============================================================================
# NORMS AND INVARIANTS
# =============================================================================

def test_error_norms_identical():
    u = np.linspace(-1, 1, 9)
    assert error_norms(u, u, 0.1) == (0.0, 0.0)


def test_error_norms_single_entry():
    u = np.zeros(8)
    v = np.zeros(8)
    v[3] = 1.0
    assert error_norms(u, v, 0.25) == (1.0, 0.5)


def test_error_norms_bound_every_node():
    rng = np.random.default_rng(5)
    u, v = rng.standard_normal(30), rng.standard_normal(30)
    l_inf, l_2 = error_norms(u, v, 0.3)
    assert np.all(np.abs(u - v) <= l_inf)
    assert l_2 > 0.0


def test_error_norms_reject_bad_input():
    with pytest.raises(ShapeMismatchError):
        error_norms(np.zeros(3), np.zeros(4), 0.1)
    with pytest.raises(DomainError):
        error_norms(np.zeros(3), np.zeros(3), 0.0)


def test_invariants_of_zero():
    assert invariants(np.zeros(10), 0.5) == (0.0, 0.0, 0.0)


def test_invariants_of_soliton():
    grid = make_grid(-15, 15, 100)
    u = 0.5 / np.cosh(0.5 * grid.nodes) ** 2
    i1, i2, i3 = invariants(u, grid.h)
    assert i1 == pytest.approx(2.0, abs=1e-4)
    assert i2 == pytest.approx(2.0 / 3.0, abs=1e-4)
    assert i3 == pytest.approx(26.0 / 45.0, abs=1e-4)
    assert cubic_invariant(u, grid.h) == pytest.approx(-4.0 / 45.0, abs=1e-4)


def test_make_record_fields():
    u = np.array([0.0, 1.0, 2.0])
    record = make_record(0.5, u, u + 0.1, 1.0)
    assert record.t == 0.5
    assert record.l_inf == pytest.approx(0.1)
    assert record.i1 == pytest.approx(3.0)
    row = record.to_row()
    assert list(row) == ["time", "l_inf", "l_2", "i1", "i2", "i3_as_written", "i3_cubic_only"]
    assert row["i3_cubic_only"] == pytest.approx(-3.0)


# =============================================================================
# AMPLIFICATION MATRIX AND VERDICT
# =============================================================================

def test_no_dynamics_gives_identity():
    setup = ProblemSetup(
        EquationSpec(epsilon=6.0, nu=0.0, mu=0.0, kind=EquationKind.KDV),
        make_grid(-15, 15, 30), 0.5, 0.1, 1.0,
    )
    ops = build_operators(setup.grid)
    p = amplification_matrix(SolverState(t=0.0, u=np.zeros(30)), setup, ops)
    assert p.shape == (28, 28)
    assert_allclose(p, np.eye(28))
    report = stability_check(p)
    assert report.stable
    assert report.rho == pytest.approx(1.0)


def test_crank_nicolson_dispersion_is_stable():
    setup = ProblemSetup(EquationSpec.kdv(), make_grid(-15, 15, 60), 0.5, 0.1, 1.0)
    ops = build_operators(setup.grid)
    p = amplification_matrix(SolverState(t=0.0, u=np.zeros(60)), setup, ops)
    # Cayley transform of a skew matrix is orthogonal
    assert_allclose(p.T @ p, np.eye(58), atol=1e-10)
    assert stability_check(p).stable


def test_soliton_amplification_matches_eigenvalues(soliton_setup):
    ops = build_operators(soliton_setup.grid)
    state = initial_state(soliton_setup)
    report = assess_stability(state, soliton_setup, ops)
    oracle = np.max(np.abs(np.linalg.eigvals(amplification_matrix(state, soliton_setup, ops))))
    assert report.converged
    assert report.rho == pytest.approx(oracle, rel=1e-8)
    # frozen-coefficient growth is first order in dt
    assert abs(report.rho - 1.0) < soliton_setup.dt
    assert report.stable == (report.rho <= 1.0 + 1e-8)
    assert report.condition is not None and report.condition >= 1.0


def test_soliton_growth_rate_shrinks_with_time_step(soliton_setup):
    ops = build_operators(soliton_setup.grid)
    state = initial_state(soliton_setup)
    coarse = assess_stability(state, soliton_setup, ops)
    fine = assess_stability(state, replace(soliton_setup, dt=0.01), ops)
    assert fine.converged and coarse.converged
    assert abs(fine.rho - 1.0) < abs(coarse.rho - 1.0) / 4
    assert coarse.growth_over(soliton_setup.n_steps) < 1.1


def test_unconverged_estimate_is_never_stable():
    rng = np.random.default_rng(11)
    # wider than the default Krylov subspace, so one restart cannot resolve it
    q, _ = np.linalg.qr(rng.standard_normal((200, 200)))
    report = stability_check(0.5 * q, iters=1, power_tol=1e-14)
    assert not report.converged
    assert not report.stable


def test_explicit_scheme_is_unstable(soliton_setup):
    setup = replace(soliton_setup, theta=0.0)
    ops = build_operators(setup.grid)
    p = amplification_matrix(initial_state(setup), setup, ops)
    report = stability_check(p, theta=0.0, dt=setup.dt)
    assert report.rho > 10.0
    assert not report.stable


def test_stability_check_simple_matrices():
    assert stability_check(np.eye(4)).stable
    report = stability_check(2.0 * np.eye(4), theta=0.5, dt=0.1)
    assert not report.stable
    assert report.rho == pytest.approx(2.0)
    assert report.to_row() == {
        "theta": 0.5, "dt": 0.1, "rho": report.rho, "stable": False, "converged": True,
    }


def test_unstable_verdict_predicts_divergence(soliton_setup):
    setup = replace(soliton_setup, theta=0.0, t_final=20.0)
    start = np.max(np.abs(initial_state(setup).u))
    try:
        trajectory = run(setup, [20.0])
    except SolverError:
        # non-finite values stop the run
        return
    assert np.max(np.abs(trajectory.snapshots[-1].u)) >= 10 * start


# =============================================================================
# EIGENVALUE CONDITION
# =============================================================================

def test_eigenvalue_condition_examples():
    for dt in (0.01, 0.1, 1.0, 10.0):
        assert eigenvalue_condition(1.0, 1.0, 0.5, dt)
        assert not eigenvalue_condition(1.0, -1.0, 0.5, dt)
    assert eigenvalue_condition(1 + 1j, 1 - 1j, 0.5, 0.3)


def test_eigenvalue_condition_zero_denominator():
    with pytest.raises(DomainError):
        eigenvalue_condition(1.0, -2.0, 0.5, 1.0)


@pytest.mark.parametrize("dt", [0.01, 0.1, 1.0])
def test_half_weight_condition_is_inner_product_sign(dt):
    rng = np.random.default_rng(2024)
    lh = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
    lk = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
    checked = 0
    for a, b in zip(lh, lk):
        inner = a.real * b.real + a.imag * b.imag
        if abs(inner) < 1e-6 * abs(a) * abs(b):
            continue
        assert eigenvalue_condition(a, b, 0.5, dt) == (inner >= 0)
        checked += 1
    assert checked > 990

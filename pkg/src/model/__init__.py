"""PDE family, exact solutions and collocation operators"""
from .equations import (
    EquationKind,
    EquationSpec,
    ExactnessReport,
    ProblemSetup,
    boundary_values,
    central_difference_weights,
    exact_kdv,
    exact_kdvb,
    exact_solution,
    exactness_check,
    initial_condition,
    sech2,
    steps_for,
)
from .operators import (
    CollocationOperators,
    build_operators,
    linearized_operator,
    spatial_operator,
)

__all__ = [
    "EquationKind",
    "EquationSpec",
    "ExactnessReport",
    "ProblemSetup",
    "boundary_values",
    "central_difference_weights",
    "exact_kdv",
    "exact_kdvb",
    "exact_solution",
    "exactness_check",
    "initial_condition",
    "sech2",
    "steps_for",
    "CollocationOperators",
    "build_operators",
    "linearized_operator",
    "spatial_operator",
]

"""
Exception hierarchy shared by every subpackage
"""

from typing import Any, Optional


class SincKdVError(Exception):
    """Base class for all errors raised by the solver package"""


class DomainError(SincKdVError, ValueError):
    """An argument lies outside the domain an operation accepts"""


class ShapeMismatchError(SincKdVError, ValueError):
    """Vector or matrix shapes do not agree"""


class SingularMatrixError(SincKdVError, ArithmeticError):
    """LU factorization met a pivot that is zero to working precision"""

    def __init__(self, pivot_index: int, message: Optional[str] = None):
        self.pivot_index = pivot_index
        super().__init__(message or f"Matrix is singular at pivot {pivot_index}")


class SolverError(SincKdVError):
    """
    A time step failed.

    Carries the index of the failing step and, when raised from a full run,
    the trajectory recorded before the failure.
    """

    def __init__(self, step_index: int, message: str, partial: Any = None):
        self.step_index = step_index
        self.partial = partial
        super().__init__(f"Step {step_index}: {message}")


class ConfigError(SincKdVError, ValueError):
    """A configuration value is unknown, unparsable or violates an invariant"""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")

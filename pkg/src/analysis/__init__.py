"""Error norms, conservation invariants and stability analysis"""
from .norms import (
    RECORD_COLUMNS,
    DiagnosticsRecord,
    cubic_invariant,
    error_norms,
    invariants,
    make_record,
)
from .stability import (
    DEFAULT_STABILITY_TOL,
    STABILITY_COLUMNS,
    StabilityReport,
    amplification_matrix,
    assess_stability,
    eigenvalue_condition,
    stability_check,
)

__all__ = [
    "RECORD_COLUMNS",
    "DiagnosticsRecord",
    "cubic_invariant",
    "error_norms",
    "invariants",
    "make_record",
    "DEFAULT_STABILITY_TOL",
    "STABILITY_COLUMNS",
    "StabilityReport",
    "amplification_matrix",
    "assess_stability",
    "eigenvalue_condition",
    "stability_check",
]

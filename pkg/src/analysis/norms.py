"""
Error norms and conservation invariants
Discrete L-infinity/L2 errors and the mass, momentum and energy sums
"""

from dataclasses import asdict, dataclass
from typing import Dict, Tuple

import numpy as np
from numpy.typing import ArrayLike

from src.exceptions import DomainError, ShapeMismatchError


@dataclass(frozen=True)
class DiagnosticsRecord:
    """Errors and invariants of one snapshot"""
    t: float
    l_inf: float
    l_2: float
    i1: float
    i2: float
    i3: float
    # -1/3 h sum u^3 alone, the cubic part of i3
    i3_cubic: float

    def to_row(self) -> Dict[str, float]:
        """Row keyed by the records CSV header"""
        values = asdict(self)
        return {
            "time": values["t"],
            "l_inf": values["l_inf"],
            "l_2": values["l_2"],
            "i1": values["i1"],
            "i2": values["i2"],
            "i3_as_written": values["i3"],
            "i3_cubic_only": values["i3_cubic"],
        }


RECORD_COLUMNS = ("time", "l_inf", "l_2", "i1", "i2", "i3_as_written", "i3_cubic_only")


def _check_spacing(h: float) -> None:
    if not h > 0:
        raise DomainError(f"grid spacing must be positive, got {h}")


def error_norms(u_num: ArrayLike, u_exact: ArrayLike, h: float) -> Tuple[float, float]:
    """
    Maximum and discrete L2 errors.

    Args:
        u_num: Numerical nodal values
        u_exact: Reference nodal values
        h: Grid spacing

    Returns:
        (max |u - v|, sqrt(h sum |u - v|^2))
    """
    u_num = np.asarray(u_num, dtype=float)
    u_exact = np.asarray(u_exact, dtype=float)
    if u_num.shape != u_exact.shape:
        raise ShapeMismatchError(f"cannot compare shapes {u_num.shape} and {u_exact.shape}")
    _check_spacing(h)
    diff = np.abs(u_num - u_exact)
    if diff.size == 0:
        return 0.0, 0.0
    return float(np.max(diff)), float(np.sqrt(h * np.sum(diff ** 2)))


def invariants(u: ArrayLike, h: float) -> Tuple[float, float, float]:
    """h sum u, h sum u^2 and h sum (u^2 - u^3 / 3) over all nodes, endpoints included"""
    _check_spacing(h)
    u = np.asarray(u, dtype=float)
    return (
        float(h * np.sum(u)),
        float(h * np.sum(u ** 2)),
        float(h * np.sum(u ** 2 - u ** 3 / 3.0)),
    )


def cubic_invariant(u: ArrayLike, h: float) -> float:
    """-1/3 h sum u^3"""
    _check_spacing(h)
    u = np.asarray(u, dtype=float)
    return float(-h * np.sum(u ** 3) / 3.0)


def make_record(t: float, u_num: ArrayLike, u_exact: ArrayLike, h: float) -> DiagnosticsRecord:
    """Collect norms and invariants of one snapshot"""
    l_inf, l_2 = error_norms(u_num, u_exact, h)
    i1, i2, i3 = invariants(u_num, h)
    return DiagnosticsRecord(
        t=float(t),
        l_inf=l_inf,
        l_2=l_2,
        i1=i1,
        i2=i2,
        i3=i3,
        i3_cubic=cubic_invariant(u_num, h),
    )

"""
Experiment presets
Parameter sets of the published KdV and KdV-Burgers tables and figures
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.model import EquationKind


@dataclass(frozen=True)
class Preset:
    """One reproducible experiment, named after the table or figure it rebuilds"""
    name: str
    caption: str
    equation: EquationKind
    epsilon: float
    nu: float
    mu: float
    a: float
    b: float
    n: int
    dt: float
    t_final: float
    observers: Tuple[float, ...]
    theta: float = 0.5


def _levels(unit: float) -> Tuple[float, ...]:
    """unit, 2 unit, ..., 9 unit without binary noise"""
    return tuple(round(k * unit, 12) for k in range(1, 10))


def _kdv(name: str, caption: str, a: float, b: float, dt: float, unit: float) -> Preset:
    levels = _levels(unit)
    return Preset(
        name=name, caption=caption, equation=EquationKind.KDV,
        epsilon=6.0, nu=0.0, mu=1.0,
        a=a, b=b, n=100, dt=dt, t_final=levels[-1], observers=levels,
    )


def _kdvb(
    name: str,
    caption: str,
    epsilon: float,
    nu: float,
    mu: float,
    a: float,
    b: float,
    n: int,
    dt: float,
    observers: Tuple[float, ...],
) -> Preset:
    return Preset(
        name=name, caption=caption, equation=EquationKind.KDVB,
        epsilon=epsilon, nu=nu, mu=mu,
        a=a, b=b, n=n, dt=dt, t_final=observers[-1], observers=observers,
    )


PRESETS: Dict[str, Preset] = {p.name: p for p in (
    _kdv("table1", "table1: μ=1, ε=6, θ=0.5, n=100, a=−15, b=15, δt=0.1, T=0.1,…,0.9",
         -15.0, 15.0, 0.1, 0.1),
    _kdv("table2", "table2: μ=1, ε=6, θ=0.5, n=100, a=−15, b=15, δt=0.01, T=0.1,…,0.9",
         -15.0, 15.0, 0.01, 0.1),
    _kdv("table3", "table3: μ=1, ε=6, θ=0.5, n=100, a=−15, b=15, δt=0.001, T=0.1,…,0.9",
         -15.0, 15.0, 0.001, 0.1),
    _kdv("table4", "table4: μ=1, ε=6, θ=0.5, n=100, a=−15, b=15, δt=0.001, T=0.01,…,0.09",
         -15.0, 15.0, 0.001, 0.01),
    _kdvb("table5", "table5: μ=0.1, ε=2, ν=0.005, θ=0.5, n=100, a=−100, b=100, δt=0.02, T=1,…,9",
          2.0, 0.005, 0.1, -100.0, 100.0, 100, 0.02, _levels(1.0)),
    _kdvb("table6", "table6: μ=0.001, ε=1, ν=0.001, θ=0.5, n=100, a=−40, b=100, δt=0.05, T=1,…,9",
          1.0, 0.001, 0.001, -40.0, 100.0, 100, 0.05, _levels(1.0)),
    _kdvb("table7", "table7: n=16, a=0, b=100, δt=0.00001, T=0.0001,…,0.0009, μ=0.001, ε=1, ν=0.001, θ=0.5",
          1.0, 0.001, 0.001, 0.0, 100.0, 16, 1e-5, _levels(1e-4)),
    _kdvb("table8", "table8: n=16, a=−40, b=40, δt=0.02, T=1,…,9, μ=0.1, ε=2, ν=0.005, θ=0.5",
          2.0, 0.005, 0.1, -40.0, 40.0, 16, 0.02, _levels(1.0)),
    _kdvb("table9", "table9: n=16, a=8, b=99, δt=0.05, T=1,…,9, μ=0.001, ε=1, ν=0.001, θ=0.5",
          1.0, 0.001, 0.001, 8.0, 99.0, 16, 0.05, _levels(1.0)),
    _kdv("fig1", "fig1: n=100, a=−10, b=20, δt=0.01, T=1,…,9, μ=1, ε=6, θ=0.5",
         -10.0, 20.0, 0.01, 1.0),
    _kdv("fig2", "fig2: n=100, a=−15, b=15, δt=0.1, T=1,…,9, μ=1, ε=6, θ=0.5",
         -15.0, 15.0, 0.1, 1.0),
    _kdvb("fig3", "fig3: n=100, a=−100, b=100, δt=0.02, T=1, μ=0.1, ε=2, ν=0.005, θ=0.5",
          2.0, 0.005, 0.1, -100.0, 100.0, 100, 0.02, (1.0,)),
    _kdvb("fig4", "fig4: n=100, a=−40, b=100, δt=0.05, T=1, μ=0.1, ε=1, ν=0.1, θ=0.5",
          1.0, 0.1, 0.1, -40.0, 100.0, 100, 0.05, (1.0,)),
    _kdvb("fig5", "fig5: n=100, a=−40, b=100, δt=0.05, T=1, μ=0.01, ε=1, ν=0.01, θ=0.5",
          1.0, 0.01, 0.01, -40.0, 100.0, 100, 0.05, (1.0,)),
    _kdvb("fig6", "fig6: n=100, a=−40, b=100, δt=0.05, T=1, μ=0.001, ε=1, ν=0.001, θ=0.5",
          1.0, 0.001, 0.001, -40.0, 100.0, 100, 0.05, (1.0,)),
)}


def preset_names() -> List[str]:
    """Preset names in table-then-figure order"""
    return sorted(PRESETS, key=lambda name: (name.startswith("fig"), int(name.lstrip("tablefig"))))


def get_preset(name: str) -> Preset:
    """Look up a preset by name; KeyError when unknown"""
    return PRESETS[name]


def list_presets() -> str:
    """One caption line per preset"""
    return "\n".join(PRESETS[name].caption for name in preset_names())

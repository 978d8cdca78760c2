"""
Experiment configuration
Resolves defaults, presets, flat config files and command-line flags into
one validated ExperimentConfig
"""

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

from dotenv import dotenv_values

from src.config import Settings, parse_bool
from src.exceptions import ConfigError, DomainError
from src.model import EquationKind, EquationSpec, ProblemSetup, steps_for
from src.sinc import MIN_NODES, make_grid

from .presets import PRESETS, get_preset

CUSTOM_NAME = "custom"


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved parameters of one run"""
    preset: Optional[str]
    equation: EquationKind
    epsilon: float
    nu: float
    mu: float
    power: int
    a: float
    b: float
    n: int
    dt: float
    t_final: float
    theta: float
    observers: Tuple[float, ...]
    out_dir: str
    svg: bool
    stability_gate: bool
    # boundary magnitude of the exact solution above which a notice is logged
    warn_boundary: float

    @property
    def name(self) -> str:
        return self.preset or CUSTOM_NAME

    def to_equation(self) -> EquationSpec:
        return EquationSpec(
            epsilon=self.epsilon, nu=self.nu, mu=self.mu, kind=self.equation, power=self.power
        )

    def to_setup(self) -> ProblemSetup:
        return ProblemSetup(
            equation=self.to_equation(),
            grid=make_grid(self.a, self.b, self.n),
            theta=self.theta,
            dt=self.dt,
            t_final=self.t_final,
        )


# =============================================================================
# KEY PARSING
# =============================================================================

def _parse_equation(value: str) -> EquationKind:
    try:
        return EquationKind(value.strip().lower())
    except ValueError:
        raise ValueError(f"expected one of {[k.value for k in EquationKind]}, got {value!r}")


def _parse_observers(value: Union[str, Tuple[float, ...]]) -> Tuple[float, ...]:
    if isinstance(value, (tuple, list)):
        return tuple(float(t) for t in value)
    items = [item.strip() for item in value.split(",") if item.strip()]
    if not items:
        raise ValueError("no observer times given")
    return tuple(float(item) for item in items)


def _parse_preset(value: str) -> str:
    value = value.strip()
    if value not in PRESETS:
        raise ValueError(f"unknown preset {value!r}")
    return value


# config key -> (ExperimentConfig field, parser of the textual value)
KEYS: Dict[str, Tuple[str, Callable[[Any], Any]]] = {
    "preset": ("preset", _parse_preset),
    "equation": ("equation", _parse_equation),
    "epsilon": ("epsilon", float),
    "nu": ("nu", float),
    "mu": ("mu", float),
    "power": ("power", int),
    "a": ("a", float),
    "b": ("b", float),
    "n": ("n", int),
    "dt": ("dt", float),
    "T": ("t_final", float),
    "theta": ("theta", float),
    "observers": ("observers", _parse_observers),
    "out": ("out_dir", str),
    "svg": ("svg", lambda v: v if isinstance(v, bool) else parse_bool(v)),
    "stability_gate": ("stability_gate", lambda v: v if isinstance(v, bool) else parse_bool(v)),
    "warn_boundary": ("warn_boundary", float),
}

DEFAULTS: Dict[str, Any] = {
    "preset": None,
    "equation": EquationKind.KDV,
    "epsilon": 6.0,
    "nu": 0.0,
    "mu": 1.0,
    "power": 1,
    "a": -15.0,
    "b": 15.0,
    "n": 100,
    "dt": 0.1,
    "t_final": 0.9,
    "theta": 0.5,
    "observers": None,
}


def _parse_key(key: str, raw: Any) -> Tuple[str, Any]:
    if key not in KEYS:
        raise ConfigError(key, "unknown configuration key")
    attr, parser = KEYS[key]
    if raw is None:
        raise ConfigError(key, "missing value")
    try:
        return attr, parser(raw)
    except (TypeError, ValueError) as e:
        raise ConfigError(key, str(e))


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Parse a flat ``key = value`` file into ExperimentConfig field values.

    Raises:
        ConfigError: for a missing file, unknown keys or unparsable values
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError("config", f"file not found: {path}")
    values: Dict[str, Any] = {}
    for key, raw in dotenv_values(path, interpolate=False).items():
        attr, value = _parse_key(key, raw)
        values[attr] = value
    return values


def _preset_values(name: str) -> Dict[str, Any]:
    preset = get_preset(name)
    return {
        "preset": preset.name,
        "equation": preset.equation,
        "epsilon": preset.epsilon,
        "nu": preset.nu,
        "mu": preset.mu,
        "a": preset.a,
        "b": preset.b,
        "n": preset.n,
        "dt": preset.dt,
        "t_final": preset.t_final,
        "theta": preset.theta,
        "observers": preset.observers,
    }


# =============================================================================
# RESOLUTION
# =============================================================================

def _validate(values: Dict[str, Any]) -> None:
    """Check every invariant a ProblemSetup enforces, naming the offending key"""
    if not values["dt"] > 0:
        raise ConfigError("dt", f"must be positive, got {values['dt']}")
    if not values["t_final"] > 0:
        raise ConfigError("T", f"must be positive, got {values['t_final']}")
    if not 0.0 <= values["theta"] <= 1.0:
        raise ConfigError("theta", f"must lie in [0, 1], got {values['theta']}")
    if values["n"] < MIN_NODES:
        raise ConfigError("n", f"must be at least {MIN_NODES}, got {values['n']}")
    if not values["a"] < values["b"]:
        raise ConfigError("a", f"must be smaller than b={values['b']}, got {values['a']}")
    if values["nu"] < 0:
        raise ConfigError("nu", f"must be >= 0, got {values['nu']}")
    if values["equation"] is EquationKind.KDV and values["nu"] != 0:
        raise ConfigError("nu", "must be 0 for the kdv equation")
    if values["equation"] is EquationKind.KDVB and values["mu"] == 0:
        raise ConfigError("mu", "must be nonzero for the kdvb equation")
    if values["power"] < 1:
        raise ConfigError("power", f"must be a positive integer, got {values['power']}")
    if steps_for(values["t_final"], values["dt"]) is None:
        raise ConfigError("T", f"{values['t_final']} is not a whole number of steps of dt={values['dt']}")
    if not values["warn_boundary"] >= 0:
        raise ConfigError("warn_boundary", f"must be >= 0, got {values['warn_boundary']}")
    seen = set()
    for t in values["observers"]:
        if t < 0 or t > values["t_final"] * (1 + 1e-12):
            raise ConfigError("observers", f"{t} lies outside [0, T={values['t_final']}]")
        k = steps_for(t, values["dt"])
        if k is None:
            raise ConfigError("observers", f"{t} is not a multiple of dt={values['dt']}")
        if k in seen:
            raise ConfigError("observers", f"{t} is listed twice")
        seen.add(k)


def resolve_config(
    overrides: Optional[Mapping[str, Any]] = None,
    config_file: Optional[Union[str, Path]] = None,
    settings: Optional[Settings] = None,
) -> ExperimentConfig:
    """
    Merge defaults, preset, config file and flags (later wins).

    Args:
        overrides: Flag values keyed like the config file; None means unset
        config_file: Optional flat ``key = value`` file
        settings: Application settings supplying output and gate defaults

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: naming the unknown, unparsable or invalid key
    """
    settings = settings or Settings()
    flag_values: Dict[str, Any] = {}
    for key, raw in (overrides or {}).items():
        if raw is None:
            continue
        attr, value = _parse_key(key, raw)
        flag_values[attr] = value
    file_values = read_config_file(config_file) if config_file else {}

    values: Dict[str, Any] = dict(DEFAULTS)
    values.update(
        out_dir=settings.output.out_dir,
        svg=settings.output.write_svg,
        stability_gate=settings.runner.stability_gate,
        warn_boundary=settings.runner.boundary_warn_threshold,
    )
    preset = flag_values.get("preset") or file_values.get("preset")
    if preset:
        values.update(_preset_values(preset))
    values.update(file_values)
    values.update(flag_values)
    if values["observers"] is None:
        values["observers"] = (values["t_final"],)

    _validate(values)
    config = ExperimentConfig(**{f.name: values[f.name] for f in fields(ExperimentConfig)})
    try:
        config.to_setup()
    except DomainError as e:
        raise ConfigError("config", str(e))
    return config


def format_config(config: ExperimentConfig) -> str:
    """
    Render a config as ``key = value`` lines.

    Reading the text back with resolve_config reproduces the same config.
    """
    rendered = {
        "preset": config.preset,
        "equation": config.equation.value,
        "epsilon": repr(config.epsilon),
        "nu": repr(config.nu),
        "mu": repr(config.mu),
        "power": str(config.power),
        "a": repr(config.a),
        "b": repr(config.b),
        "n": str(config.n),
        "dt": repr(config.dt),
        "T": repr(config.t_final),
        "theta": repr(config.theta),
        "observers": ",".join(repr(t) for t in config.observers),
        "out": config.out_dir,
        "svg": str(config.svg).lower(),
        "stability_gate": str(config.stability_gate).lower(),
        "warn_boundary": repr(config.warn_boundary),
    }
    return "\n".join(f"{key} = {value}" for key, value in rendered.items() if value is not None)

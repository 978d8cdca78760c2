"""
Tests for environment-driven settings and logging helpers
"""

import logging

import pytest

import src.runner.experiment as experiment
from src.config import Settings, SolverConfig, get_settings, parse_bool
from src.exceptions import ConfigError
from src.utils import configure_logging, get_logger

ENV_VARS = [
    "SINCKDV_STABILITY_TOL",
    "SINCKDV_POWER_ITERS",
    "SINCKDV_POWER_TOL",
    "SINCKDV_OUT_DIR",
    "SINCKDV_SVG",
    "SINCKDV_JOBS",
    "SINCKDV_STABILITY_GATE",
    "SINCKDV_GATE_GROWTH",
    "SINCKDV_BOUNDARY_WARN",
    "SINCKDV_LOG_LEVEL",
    "SINCKDV_DEBUG",
]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    # keep load_dotenv away from any .env outside the test
    empty = tmp_path / ".env"
    empty.write_text("")
    return empty


def test_defaults(clean_env):
    settings = Settings.from_env(str(clean_env))
    assert settings.solver == SolverConfig()
    assert settings.solver.stability_tol == 1e-8
    assert settings.output.out_dir == "results"
    assert settings.output.table_precision == 6
    assert settings.runner.jobs == 1
    assert settings.runner.stability_gate is True
    assert settings.runner.gate_growth == 10.0
    assert settings.runner.boundary_warn_threshold == 1e-3
    assert settings.log_level == "INFO"


def test_environment_overrides(clean_env, monkeypatch):
    monkeypatch.setenv("SINCKDV_STABILITY_TOL", "1e-6")
    monkeypatch.setenv("SINCKDV_POWER_ITERS", "50")
    monkeypatch.setenv("SINCKDV_OUT_DIR", "/tmp/out")
    monkeypatch.setenv("SINCKDV_SVG", "yes")
    monkeypatch.setenv("SINCKDV_STABILITY_GATE", "off")
    monkeypatch.setenv("SINCKDV_GATE_GROWTH", "100")
    monkeypatch.setenv("SINCKDV_BOUNDARY_WARN", "inf")
    settings = Settings.from_env(str(clean_env))
    assert settings.solver.stability_tol == 1e-6
    assert settings.solver.power_iters == 50
    assert settings.output.out_dir == "/tmp/out"
    assert settings.output.write_svg is True
    assert settings.runner.stability_gate is False
    assert settings.runner.gate_growth == 100.0
    assert settings.runner.boundary_warn_threshold == float("inf")


def test_dotenv_file_is_read(clean_env):
    clean_env.write_text("SINCKDV_JOBS=3\n")
    settings = Settings.from_env(str(clean_env))
    assert settings.runner.jobs == 3


def test_debug_lowers_log_level(clean_env, monkeypatch):
    monkeypatch.setenv("SINCKDV_DEBUG", "true")
    settings = Settings.from_env(str(clean_env))
    assert settings.debug is True
    assert settings.log_level == "DEBUG"


def test_unparsable_value_names_variable(clean_env, monkeypatch):
    monkeypatch.setenv("SINCKDV_POWER_ITERS", "many")
    with pytest.raises(ConfigError) as info:
        Settings.from_env(str(clean_env))
    assert info.value.field == "SINCKDV_POWER_ITERS"


@pytest.mark.parametrize("text,value", [("1", True), ("True", True), ("on", True), ("0", False), ("no", False)])
def test_parse_bool(text, value):
    assert parse_bool(text) is value


def test_parse_bool_rejects_garbage():
    with pytest.raises(ValueError):
        parse_bool("maybe")


def test_get_settings_is_cached():
    get_settings.cache_clear()
    assert get_settings() is get_settings()
    get_settings.cache_clear()


def test_loggers_share_namespace():
    root = configure_logging("warning")
    assert root.name == "sinckdv"
    assert root.level == logging.WARNING
    assert get_logger("solver").name == "sinckdv.solver"
    configure_logging("INFO")
    assert len(root.handlers) == 1


def test_module_loggers_drop_package_prefix():
    assert get_logger("src.solver.stepper").name == "sinckdv.solver.stepper"
    assert experiment.logger.name == "sinckdv.runner.experiment"

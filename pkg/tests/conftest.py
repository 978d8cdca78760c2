"""Shared fixtures"""

import logging

import pytest

from src.config import Settings
from src.model import EquationSpec, ProblemSetup
from src.sinc import make_grid
from src.utils.logging import ROOT_LOGGER


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Drop handlers installed by CLI runs so they never outlive a captured stream"""
    yield
    root = logging.getLogger(ROOT_LOGGER)
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.NOTSET)


@pytest.fixture
def soliton_setup() -> ProblemSetup:
    """KdV soliton on [-15, 15] with 100 nodes, dt = 0.1"""
    return ProblemSetup(
        equation=EquationSpec.kdv(),
        grid=make_grid(-15.0, 15.0, 100),
        theta=0.5,
        dt=0.1,
        t_final=0.9,
    )


@pytest.fixture
def zero_setup() -> ProblemSetup:
    """KdV-Burgers with nu = 0, whose exact solution vanishes identically"""
    return ProblemSetup(
        equation=EquationSpec.kdvb(epsilon=1.0, nu=0.0, mu=1.0),
        grid=make_grid(-10.0, 10.0, 40),
        theta=0.5,
        dt=0.1,
        t_final=1.0,
    )


@pytest.fixture
def settings() -> Settings:
    return Settings()

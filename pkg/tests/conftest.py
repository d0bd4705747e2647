"""Shared fixtures and configuration for realizer tests."""

import random
from pathlib import Path

import pytest

from realizer import config as config_module
from realizer.config import reset_config
from realizer.differential import IOEquation, Realization
from realizer.expr import parse_poly, parse_ratfunc

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng() -> random.Random:
    """Provide a seeded random number generator for reproducible tests."""
    return random.Random(42)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config file at a temp dir and clear REALIZER_* env vars."""
    monkeypatch.setattr(config_module, "CONFIG_FILE", tmp_path / "realizer" / "config.json")
    for name in (
        "SEED",
        "SPECIALIZATIONS",
        "HEIGHT_BOUND",
        "VERIFY",
        "MAX_WORKERS",
        "REPARAM_METHOD",
    ):
        monkeypatch.delenv(f"REALIZER_{name}", raising=False)
    reset_config()
    yield
    reset_config()


# =============================================================================
# Worked systems
# =============================================================================


@pytest.fixture
def cubic_equation() -> IOEquation:
    """IO-equation of x' = u x, y = u x^3 + x^2."""
    return IOEquation.from_poly(
        parse_poly(
            "27*u^6*y^3 - 27*u^5*y^2*y' + 27*u^4*u'*y^3 + 9*u^4*y*y'^2"
            " - 18*u^3*u'*y^2*y' + 9*u^2*u'^2*y^3 - 4*u^4*y^2 - u^3*y'^3"
            " + 3*u^2*u'*y*y'^2 - 3*u*u'^2*y^2*y' + u'^3*y^3 + 4*u^3*y*y'"
            " - 4*u^2*u'*y^2 - u^2*y'^2 + 4*u*u'*y*y' - u'*y'^2"
        )
    )


@pytest.fixture
def cubic_realization() -> Realization:
    return Realization(p=(parse_ratfunc("u*x"),), q=parse_ratfunc("u*x^3 + x^2"))


@pytest.fixture
def improper_realization() -> Realization:
    """Tracing index 2: the output only depends on (1 - x)^2."""
    return Realization(
        p=(parse_ratfunc("(1 - x)/(2*u)"),),
        q=parse_ratfunc("(1 - x)^4/(u^2 + (1 - x)^6)"),
    )


@pytest.fixture
def improper_equation() -> IOEquation:
    return IOEquation.from_poly(
        parse_poly("u^2*(3 + 2*u')^3*y^6 - (y - u*y')*(2*(1 + u')*y + u*y')^2")
    )


@pytest.fixture
def complex_realization() -> Realization:
    """Complex realization of a real equation that has no real realization."""
    return Realization(
        p=(parse_ratfunc("I*(x^2 - 2*x - 1)*(u*x^4 - 6*x^2 + u)/(8*(x^2 + 1)^2)"),),
        q=parse_ratfunc("(-x^2 - 2*x + 1)/(x^2 - 2*x - 1)"),
    )


@pytest.fixture
def complex_equation() -> IOEquation:
    return IOEquation.from_poly(
        parse_poly(
            "9*(u - 1)^2*y^4 + (-12*u^2 - 24*u + 36)*y^3"
            " + (22*u^2 + 128*y'^2 - 12*u + 54)*y^2 + (-12*u^2 - 24*u + 36)*y"
            " + 9*u^2 + 128*y'^2 - 18*u + 9"
        )
    )

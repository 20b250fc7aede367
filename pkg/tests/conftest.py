"""Shared pytest fixtures for pga-kit tests.

Factories live in tests/fixtures/factories.py so they can be imported
without pytest; the fixtures here wrap them.
"""

from pathlib import Path

import numpy as np
import pytest

from pga_kit.algebra.signature import Signature
from pga_kit.config import Config, load_config
from pga_kit.dynamics.inertia import InertiaTensor, build_inertia

from .fixtures.factories import (
    CUBE_MASSES,
    ELLIPSOID_MASSES,
    make_body_file,
    make_body_state,
    make_rng,
)

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def d201() -> Signature:
    return Signature.parse("d201")


@pytest.fixture(scope="session")
def d301() -> Signature:
    return Signature.parse("d301")


@pytest.fixture(scope="session")
def r300() -> Signature:
    return Signature.parse("r300")


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for the counted random trials."""
    return make_rng()


@pytest.fixture(scope="session")
def cube_inertia() -> InertiaTensor:
    """Eight unit masses at the corners of [-1, 1]^3."""
    return build_inertia(CUBE_MASSES)


@pytest.fixture(scope="session")
def ellipsoid_inertia() -> InertiaTensor:
    """Six unit masses with distinct principal moments (26, 20, 10)."""
    return build_inertia(ELLIPSOID_MASSES)


@pytest.fixture
def spinning_cube(cube_inertia):
    return make_body_state(cube_inertia, angular=(0.0, 0.0, 1.0))


@pytest.fixture
def cube_file() -> Path:
    """The shipped cube body description."""
    return FIXTURES_DIR / "cube.txt"


@pytest.fixture
def body_file(tmp_path) -> Path:
    return make_body_file(tmp_path / "body.txt", ELLIPSOID_MASSES)


@pytest.fixture
def isolated_env(tmp_path, monkeypatch):
    """Point HOME, the data dir and the working directory at a temp dir.

    Keeps a developer's own config.toml and PGA_* variables out of the tests.
    """
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("PGA_KIT_DATA_DIR", str(tmp_path / "data"))
    for key in ("PGA_SIG", "PGA_ZERO_TOLERANCE", "PGA_DT", "PGA_STEPS", "PGA_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def sample_config(isolated_env) -> Config:
    """Default configuration with no file on disk."""
    return load_config()


@pytest.fixture
def config_toml_content():
    """Sample TOML configuration content."""
    return """
[algebra]
signature = "d301"
zero_tolerance = 1e-9

[display]
significant_digits = 6
formula_match_style = "fuzzy"
max_suggestions = 2

[simulation]
dt = 0.01
steps = 50
renormalize = false
progress = true

[logging]
log_level = "DEBUG"
log_file = "pga.log"
"""

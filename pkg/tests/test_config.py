"""Tests for configuration management."""

from pathlib import Path

from pga_kit.config import (
    AlgebraConfig,
    Config,
    DisplayConfig,
    LoggingConfig,
    SimulationConfig,
    load_config,
)


class TestAlgebraConfig:
    """Tests for AlgebraConfig dataclass."""

    def test_default_values(self):
        """Test default configuration values."""
        config = AlgebraConfig()
        assert config.signature == "d201"
        assert config.zero_tolerance == 1e-12

    def test_custom_values(self):
        """Test custom configuration values."""
        config = AlgebraConfig(signature="custom:3,0,1", zero_tolerance=1e-6)
        assert config.signature == "custom:3,0,1"
        assert config.zero_tolerance == 1e-6


class TestDisplayConfig:
    """Tests for DisplayConfig dataclass."""

    def test_default_values(self):
        """Test default configuration values."""
        config = DisplayConfig()
        assert config.significant_digits == 10
        assert config.formula_match_style == "word_boundary"
        assert config.max_suggestions == 5


class TestSimulationConfig:
    """Tests for SimulationConfig dataclass."""

    def test_default_values(self):
        """Test default configuration values."""
        config = SimulationConfig()
        assert config.dt == 1e-3
        assert config.steps == 10000
        assert config.renormalize is True
        assert config.progress is False


class TestLoggingConfig:
    def test_default_values(self):
        """Test file logging is off by default."""
        config = LoggingConfig()
        assert config.log_level == "WARNING"
        assert config.log_file == ""


class TestConfig:
    """Tests for main Config dataclass."""

    def test_default_sections(self):
        """Test all sections are created with defaults."""
        config = Config()
        assert isinstance(config.algebra, AlgebraConfig)
        assert isinstance(config.display, DisplayConfig)
        assert isinstance(config.simulation, SimulationConfig)
        assert isinstance(config.logging, LoggingConfig)

    def test_data_dir_from_env(self, isolated_env):
        """Test PGA_KIT_DATA_DIR sets the data directory."""
        config = Config()
        assert config.data_dir == isolated_env / "data"
        assert config.config_path == isolated_env / "data" / "config.toml"

    def test_data_dir_default(self, isolated_env, monkeypatch):
        monkeypatch.delenv("PGA_KIT_DATA_DIR")
        assert Config().data_dir == Path.home() / ".config" / "pga-kit"


class TestLoadConfig:
    """Tests for load_config function."""

    def test_defaults_without_file(self, sample_config):
        """Test defaults are used when no config file exists."""
        assert sample_config.algebra.signature == "d201"
        assert sample_config.simulation.steps == 10000
        assert sample_config.logging.log_file == ""

    def test_load_from_toml(self, isolated_env, config_toml_content):
        """Test every section is read from TOML."""
        config_file = isolated_env / "config.toml"
        config_file.write_text(config_toml_content)

        config = load_config(config_file)

        assert config.algebra.signature == "d301"
        assert config.algebra.zero_tolerance == 1e-9
        assert config.display.significant_digits == 6
        assert config.display.formula_match_style == "fuzzy"
        assert config.display.max_suggestions == 2
        assert config.simulation.dt == 0.01
        assert config.simulation.steps == 50
        assert config.simulation.renormalize is False
        assert config.simulation.progress is True
        assert config.logging.log_level == "DEBUG"
        assert config.logging.log_file == "pga.log"

    def test_finds_config_in_working_directory(self, isolated_env, config_toml_content):
        """Test ./config.toml is picked up when no path is given."""
        (isolated_env / "config.toml").write_text(config_toml_content)
        assert load_config().algebra.signature == "d301"

    def test_home_config_wins(self, isolated_env, config_toml_content):
        """Test ~/.config/pga-kit/config.toml is searched before ./config.toml."""
        home_config = isolated_env / ".config" / "pga-kit" / "config.toml"
        home_config.parent.mkdir(parents=True)
        home_config.write_text('[algebra]\nsignature = "r300"\n')
        (isolated_env / "config.toml").write_text(config_toml_content)
        assert load_config().algebra.signature == "r300"

    def test_partial_file_keeps_defaults(self, isolated_env):
        config_file = isolated_env / "config.toml"
        config_file.write_text("[simulation]\nsteps = 12\n")
        config = load_config(config_file)
        assert config.simulation.steps == 12
        assert config.simulation.dt == 1e-3
        assert config.algebra.signature == "d201"

    def test_missing_explicit_path(self, isolated_env):
        assert load_config(isolated_env / "nope.toml").algebra.signature == "d201"


class TestEnvOverrides:
    """Tests for environment variables taking precedence over TOML."""

    def test_env_overrides_toml(self, isolated_env, config_toml_content, monkeypatch):
        config_file = isolated_env / "config.toml"
        config_file.write_text(config_toml_content)
        monkeypatch.setenv("PGA_SIG", "r300")
        monkeypatch.setenv("PGA_ZERO_TOLERANCE", "1e-3")
        monkeypatch.setenv("PGA_DT", "0.5")
        monkeypatch.setenv("PGA_STEPS", "3")
        monkeypatch.setenv("PGA_LOG_LEVEL", "ERROR")

        config = load_config(config_file)

        assert config.algebra.signature == "r300"
        assert config.algebra.zero_tolerance == 1e-3
        assert config.simulation.dt == 0.5
        assert config.simulation.steps == 3
        assert config.logging.log_level == "ERROR"

    def test_invalid_float_falls_back(self, isolated_env, monkeypatch):
        monkeypatch.setenv("PGA_DT", "fast")
        assert load_config().simulation.dt == 1e-3

    def test_invalid_int_falls_back(self, isolated_env, monkeypatch):
        monkeypatch.setenv("PGA_STEPS", "1.5")
        assert load_config().simulation.steps == 10000

"""Configuration management for pga-kit.

Loads configuration from TOML file with environment variable overrides.
Environment variables take precedence over TOML values.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import tomli


@dataclass
class AlgebraConfig:
    """Default algebra and numeric thresholds."""

    signature: str = "d201"  # d201, d301, r300 or custom:p,m,z[,dual]
    zero_tolerance: float = 1e-12  # Coefficients at or below this print as absent


@dataclass
class DisplayConfig:
    """CLI output configuration."""

    significant_digits: int = 10
    # Formula name matching: "substring", "fuzzy" (fzf-style) or "word_boundary"
    formula_match_style: str = "word_boundary"
    max_suggestions: int = 5


@dataclass
class SimulationConfig:
    """Defaults for `pga simulate`."""

    dt: float = 1e-3
    steps: int = 10000
    renormalize: bool = True  # Renormalize the motor after every step
    progress: bool = False  # Show a progress bar


@dataclass
class LoggingConfig:
    """Logging configuration."""

    log_level: str = "WARNING"  # DEBUG, INFO, WARNING, ERROR
    log_file: str = ""  # Empty = no file logging, or path like "pga-kit.log"


@dataclass
class Config:
    """Main application configuration."""

    algebra: AlgebraConfig = field(default_factory=AlgebraConfig)
    display: DisplayConfig = field(default_factory=DisplayConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    data_dir: Path = field(
        default_factory=lambda: Path(
            os.environ.get("PGA_KIT_DATA_DIR", str(Path.home() / ".config" / "pga-kit"))
        )
    )

    @property
    def config_path(self) -> Path:
        """Where `pga init` writes the config template."""
        return self.data_dir / "config.toml"


def _get_env(key: str, default: str = "") -> str:
    """Get environment variable with fallback."""
    return os.environ.get(key, default)


def _get_env_float(key: str, default: float) -> float:
    """Get environment variable as float with fallback."""
    val = os.environ.get(key)
    if val is not None:
        try:
            return float(val)
        except ValueError:
            pass
    return default


def _get_env_int(key: str, default: int) -> int:
    """Get environment variable as int with fallback."""
    val = os.environ.get(key)
    if val is not None:
        try:
            return int(val)
        except ValueError:
            pass
    return default


def load_config(config_path: Optional[Path] = None) -> Config:
    """Load configuration from TOML file with environment variable overrides.

    Args:
        config_path: Path to config.toml file. If None, looks for config.toml
                     in ~/.config/pga-kit/config.toml or current directory.

    Returns:
        Config object with all settings.

    Environment variables override TOML values:
        - PGA_SIG: Default signature
        - PGA_ZERO_TOLERANCE: Display threshold for coefficients
        - PGA_DT: Integration step size
        - PGA_STEPS: Integration step count
        - PGA_LOG_LEVEL: Log level
    """
    toml_data: dict = {}

    # Search for config file
    if config_path is None:
        search_paths = [
            Path.home() / ".config" / "pga-kit" / "config.toml",
            Path.cwd() / "config.toml",
        ]
        for path in search_paths:
            if path.exists():
                config_path = path
                break

    if config_path and config_path.exists():
        with open(config_path, "rb") as f:
            toml_data = tomli.load(f)

    algebra_data = toml_data.get("algebra", {})
    algebra = AlgebraConfig(
        signature=_get_env("PGA_SIG", algebra_data.get("signature", "d201")),
        zero_tolerance=_get_env_float(
            "PGA_ZERO_TOLERANCE", algebra_data.get("zero_tolerance", 1e-12)
        ),
    )

    display_data = toml_data.get("display", {})
    display = DisplayConfig(
        significant_digits=display_data.get("significant_digits", 10),
        formula_match_style=display_data.get("formula_match_style", "word_boundary"),
        max_suggestions=display_data.get("max_suggestions", 5),
    )

    sim_data = toml_data.get("simulation", {})
    simulation = SimulationConfig(
        dt=_get_env_float("PGA_DT", sim_data.get("dt", 1e-3)),
        steps=_get_env_int("PGA_STEPS", sim_data.get("steps", 10000)),
        renormalize=sim_data.get("renormalize", True),
        progress=sim_data.get("progress", False),
    )

    logging_data = toml_data.get("logging", {})
    logging_cfg = LoggingConfig(
        log_level=_get_env("PGA_LOG_LEVEL", logging_data.get("log_level", "WARNING")),
        log_file=logging_data.get("log_file", ""),
    )

    return Config(
        algebra=algebra,
        display=display,
        simulation=simulation,
        logging=logging_cfg,
    )

"""Application configuration and environment loading."""

import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv


class ConfigError(ValueError):
    """Raised when an environment variable holds a malformed value."""


@dataclass(frozen=True)
class OutputConfig:
    """Plain-text and report output settings."""

    reports_root: Path = Path("reports")
    float_digits: int = 10


@dataclass(frozen=True)
class ImagingConfig:
    """PGM export defaults."""

    pgm_maxval: int = 255


@dataclass(frozen=True)
class CostModelConfig:
    """Hypothetical machine used by the factoring-time estimate."""

    ops_per_second: float = 1e11


@dataclass(frozen=True)
class MathbookConfig:
    """Top-level config, loaded once by the CLI."""

    output: OutputConfig = field(default_factory=OutputConfig)
    imaging: ImagingConfig = field(default_factory=ImagingConfig)
    cost_model: CostModelConfig = field(default_factory=CostModelConfig)

    @property
    def reports_root(self) -> Path:
        """Return the directory persisted verification runs land under."""
        return self.output.reports_root

    @property
    def pgm_maxval(self) -> int:
        """Return the default PGM maxval."""
        return self.imaging.pgm_maxval

    @property
    def ops_per_second(self) -> float:
        """Return the machine speed assumed by `nt factortime`."""
        return self.cost_model.ops_per_second


def _int_env(name: str, default: int, *, low: int, high: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if not low <= value <= high:
        raise ConfigError(f"{name} must be in [{low}, {high}], got {value}")
    return value


def _positive_float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from exc
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def load_config(env_path: Path = Path(".env")) -> MathbookConfig:
    """Load config from environment and optional .env file."""
    load_dotenv(env_path, override=False)
    reports_raw = os.getenv("MATHBOOK_REPORTS_ROOT")
    return MathbookConfig(
        output=OutputConfig(
            reports_root=Path(reports_raw) if reports_raw else Path("reports"),
            float_digits=_int_env("MATHBOOK_FLOAT_DIGITS", 10, low=1, high=17),
        ),
        imaging=ImagingConfig(
            pgm_maxval=_int_env("MATHBOOK_PGM_MAXVAL", 255, low=1, high=65535),
        ),
        cost_model=CostModelConfig(
            ops_per_second=_positive_float_env("MATHBOOK_OPS_PER_SECOND", 1e11),
        ),
    )

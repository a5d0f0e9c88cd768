"""Tests for application config."""

from __future__ import annotations

from pathlib import Path

import pytest

from mathbook.config import ConfigError, MathbookConfig, load_config

_KEYS = (
    "MATHBOOK_REPORTS_ROOT",
    "MATHBOOK_FLOAT_DIGITS",
    "MATHBOOK_PGM_MAXVAL",
    "MATHBOOK_OPS_PER_SECOND",
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for key in _KEYS:
        # set first so teardown also drops values loaded from a .env file
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)


def test_defaults(tmp_path: Path) -> None:
    cfg = load_config(tmp_path / "missing.env")
    assert cfg == MathbookConfig()
    assert cfg.reports_root == Path("reports")
    assert cfg.pgm_maxval == 255
    assert cfg.ops_per_second == 1e11
    assert cfg.output.float_digits == 10


def test_environment_overrides(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setenv("MATHBOOK_REPORTS_ROOT", str(tmp_path / "runs"))
    monkeypatch.setenv("MATHBOOK_PGM_MAXVAL", "15")
    monkeypatch.setenv("MATHBOOK_OPS_PER_SECOND", "2e9")
    cfg = load_config(tmp_path / "missing.env")
    assert cfg.reports_root == tmp_path / "runs"
    assert cfg.pgm_maxval == 15
    assert cfg.ops_per_second == 2e9


def test_dotenv_file_is_read(tmp_path: Path) -> None:
    env_file = tmp_path / ".env"
    env_file.write_text("MATHBOOK_FLOAT_DIGITS=4\n", encoding="utf-8")
    assert load_config(env_file).output.float_digits == 4


@pytest.mark.parametrize(
    ("key", "value"),
    [
        ("MATHBOOK_PGM_MAXVAL", "0"),
        ("MATHBOOK_PGM_MAXVAL", "abc"),
        ("MATHBOOK_FLOAT_DIGITS", "40"),
        ("MATHBOOK_OPS_PER_SECOND", "-1"),
    ],
)
def test_malformed_values_raise(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch, key: str, value: str
) -> None:
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.env")

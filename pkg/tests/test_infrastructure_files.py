"""Tests for input and artifact file adapters."""

import io
from fractions import Fraction
from pathlib import Path

import pytest

from mathbook.infrastructure.files import (
    SourceError,
    read_bytes,
    read_inline_or_file,
    read_points_csv,
    write_text,
)


def test_inline_value_file_and_stdin(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    source = write_text(tmp_path / "nested" / "key.txt", "3 2; 5 3")
    assert read_inline_or_file(str(source)) == "3 2; 5 3"
    assert read_inline_or_file("1 0; 0 1") == "1 0; 0 1"
    monkeypatch.setattr("sys.stdin", io.StringIO("x^2 - 1"))
    assert read_inline_or_file("-") == "x^2 - 1"


def test_points_csv(tmp_path: Path) -> None:
    path = tmp_path / "braking.csv"
    path.write_text("# km/h vs m\nspeed,distance,note\n10, 1.5,a\n20,4,\n")
    assert read_points_csv(path) == [(10, Fraction(3, 2)), (20, 4)]
    assert read_points_csv(path, x_column="distance", y_column="speed") == [
        (Fraction(3, 2), 10),
        (4, 20),
    ]


def test_points_csv_errors(tmp_path: Path) -> None:
    path = tmp_path / "points.csv"
    path.write_text("x,y\n1,abc\n")
    with pytest.raises(SourceError, match="non-numeric"):
        read_points_csv(path)
    with pytest.raises(SourceError, match="no column"):
        read_points_csv(path, x_column="t")
    with pytest.raises(SourceError):
        read_points_csv(tmp_path / "missing.csv")


def test_read_bytes_missing_file(tmp_path: Path) -> None:
    with pytest.raises(SourceError, match="cannot read"):
        read_bytes(tmp_path / "absent.pgm")

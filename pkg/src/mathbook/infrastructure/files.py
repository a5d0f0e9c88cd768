"""Filesystem and stdin adapters for command inputs and artifacts."""

import sys
from fractions import Fraction
from pathlib import Path

import pandas as pd


class SourceError(RuntimeError):
    """Raised when an input file cannot be read or an artifact cannot be written."""


STDIN_MARKER = "-"


def read_inline_or_file(value: str) -> str:
    """Resolve a literal argument.

    ``-`` reads stdin, an existing file path reads that file, anything else is
    taken as the literal text itself.
    """
    if value == STDIN_MARKER:
        return sys.stdin.read()
    path = Path(value)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise SourceError(f"{path} is not UTF-8 text") from exc
    return value


def read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from exc


def write_bytes(path: Path, data: bytes) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as exc:
        raise SourceError(f"cannot write {path}: {exc}") from exc
    return path


def write_text(path: Path, text: str) -> Path:
    return write_bytes(path, text.encode("utf-8"))


def read_points_csv(
    path: Path, *, x_column: str | None = None, y_column: str | None = None
) -> list[tuple[Fraction, Fraction]]:
    """Read ``(x, y)`` pairs from a CSV with a header row.

    Cells are read as text so decimals become exact rationals. Without explicit
    column names the first two columns are used.
    """
    try:
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True, comment="#")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise SourceError(f"cannot read points from {path}: {exc}") from exc
    columns = list(frame.columns)
    if len(columns) < 2:
        raise SourceError(f"{path} needs at least two columns")
    xs = x_column or columns[0]
    ys = y_column or columns[1]
    for name in (xs, ys):
        if name not in frame.columns:
            raise SourceError(f"{path} has no column {name!r}")
    frame = frame[[xs, ys]].dropna()
    try:
        return [
            (Fraction(x.strip()), Fraction(y.strip()))
            for x, y in frame.itertuples(index=False, name=None)
        ]
    except ValueError as exc:
        raise SourceError(f"{path} holds a non-numeric point: {exc}") from exc


__all__ = [
    "SourceError",
    "read_bytes",
    "read_inline_or_file",
    "read_points_csv",
    "write_bytes",
    "write_text",
]

"""Shared helpers for preview mode and persisted runs."""

import csv
from collections.abc import Callable, Iterable, Sequence
from contextlib import redirect_stdout
from dataclasses import dataclass
from io import StringIO
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import Any

from mathbook.application.run_writer import (
    RunContext,
    RunResult,
    RunStatus,
    SummaryContent,
    build_summary_lines,
    create_run,
    finalize_run,
    list_output_files,
)
from mathbook.application.stdout_renderer import render_stdout_report


def write_csv(path: Path, header: Sequence[Any], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a UTF-8 CSV with a header row, returning the path."""
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def render_stdout_with_tempdir[T](
    *,
    title: str,
    temp_prefix: str,
    runner: Callable[[Path], T],
) -> T:
    """Run in a throwaway directory, then render the log and artifacts."""
    with TemporaryDirectory(prefix=temp_prefix) as tmp_dir:
        buffer = StringIO()
        with redirect_stdout(buffer):
            outcome = runner(Path(tmp_dir))
        render_stdout_report(
            title=title,
            captured_stdout=buffer.getvalue(),
            output_files=list_output_files(Path(tmp_dir)),
        )
    return outcome


@dataclass(frozen=True)
class ReportSpec:
    """Static metadata for a persisted capability."""

    capability: str
    title: str
    temp_prefix: str
    findings: tuple[str, ...]


def finalize_report(
    ctx: RunContext,
    *,
    summary: SummaryContent,
    status: RunStatus = "success",
    error: str | None = None,
) -> RunResult:
    """Collect the artifacts and write the standard summary and manifest."""
    output_files = list_output_files(ctx.output_dir)
    lines = build_summary_lines(
        summary, capability=ctx.capability, output_files=output_files
    )
    return finalize_run(
        ctx,
        status=status,
        output_files=output_files,
        summary_lines=lines,
        error=error,
    )


def start_report(
    spec: ReportSpec, *, reports_root: Path, inputs: dict[str, Any] | None = None
) -> RunContext:
    """Open ``<reports_root>/<capability>/<YYYYMMDD_HHMMSS>/``."""
    return create_run(spec.capability, inputs=inputs or {}, reports_root=reports_root)


__all__ = [
    "ReportSpec",
    "finalize_report",
    "render_stdout_with_tempdir",
    "start_report",
    "write_csv",
]

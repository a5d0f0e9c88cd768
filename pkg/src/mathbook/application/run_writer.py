"""Run directories for persisted capabilities: summary.md plus manifest.json."""

import json
from dataclasses import dataclass, field
from datetime import UTC, datetime
from pathlib import Path
from typing import Any, Literal

from mathbook.application.json_output import to_jsonable

type RunStatus = Literal["success", "failed"]

RUN_ID_FORMAT = "%Y%m%d_%H%M%S"


@dataclass(frozen=True)
class RunResult:
    """Where a finished run left its artifacts."""

    run_id: str
    capability: str
    status: RunStatus
    output_dir: Path
    manifest_path: Path
    summary_path: Path
    output_files: tuple[Path, ...]


@dataclass(frozen=True)
class RunContext:
    run_id: str
    capability: str
    output_dir: Path
    started_at: str
    inputs: dict[str, Any]


@dataclass(frozen=True)
class CheckTally:
    """Pass/fail counts of a verification run."""

    passed: int
    failed: int

    @property
    def total(self) -> int:
        return self.passed + self.failed


@dataclass(frozen=True)
class SummaryContent:
    title: str
    key_findings: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    inputs: dict[str, Any] = field(default_factory=dict)
    tally: CheckTally | None = None


def _utc_now_iso() -> str:
    return datetime.now(UTC).isoformat()


def create_run(
    capability: str,
    *,
    inputs: dict[str, Any],
    reports_root: Path,
    run_id: str | None = None,
) -> RunContext:
    """Create ``<reports_root>/<capability>/<run_id>/``; ids default to a timestamp."""
    run_id = run_id or datetime.now().strftime(RUN_ID_FORMAT)
    output_dir = reports_root / capability / run_id
    output_dir.mkdir(parents=True, exist_ok=True)
    return RunContext(
        run_id=run_id,
        capability=capability,
        output_dir=output_dir,
        started_at=_utc_now_iso(),
        inputs=inputs,
    )


def list_output_files(output_dir: Path) -> tuple[Path, ...]:
    return tuple(sorted(p for p in output_dir.rglob("*") if p.is_file()))


def finalize_run(
    ctx: RunContext,
    *,
    status: RunStatus,
    output_files: tuple[Path, ...],
    summary_lines: list[str],
    error: str | None = None,
) -> RunResult:
    """Write summary.md and manifest.json next to the artifacts."""
    summary_path = ctx.output_dir / "summary.md"
    summary_path.write_text("\n".join(summary_lines) + "\n", encoding="utf-8")

    manifest_path = ctx.output_dir / "manifest.json"
    artifacts = tuple(p for p in output_files if p != summary_path) + (summary_path,)
    manifest = {
        "run_id": ctx.run_id,
        "capability": ctx.capability,
        "started_at": ctx.started_at,
        "finished_at": _utc_now_iso(),
        "status": status,
        "inputs": to_jsonable(ctx.inputs),
        "outputs": [str(p.relative_to(ctx.output_dir)) for p in artifacts]
        + ["manifest.json"],
        "error": error,
    }
    manifest_path.write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    return RunResult(
        run_id=ctx.run_id,
        capability=ctx.capability,
        status=status,
        output_dir=ctx.output_dir,
        manifest_path=manifest_path,
        summary_path=summary_path,
        output_files=artifacts + (manifest_path,),
    )


def _bullets(items: list[str], empty: str) -> list[str]:
    return [f"- {item}" for item in items] if items else [f"- {empty}"]


def build_summary_lines(
    content: SummaryContent,
    capability: str,
    output_files: tuple[Path, ...],
) -> list[str]:
    """Markdown summary: inputs, outputs, check tally, findings and warnings."""
    lines = [f"# {content.title}", "", "## Inputs"]
    inputs = [f"`{k}`: `{content.inputs[k]}`" for k in sorted(content.inputs)]
    lines.extend(_bullets(inputs, "(none)"))
    lines.extend(["", "## Outputs", f"- `capability`: `{capability}`"])
    lines.extend(_bullets([f"`{p.name}`" for p in output_files], "(no artifacts)"))
    if content.tally is not None:
        tally = content.tally
        lines.extend(
            [
                "",
                "## Checks",
                f"- passed: {tally.passed} of {tally.total}",
                f"- failed: {tally.failed}",
            ]
        )
    lines.extend(["", "## Key Findings"])
    lines.extend(_bullets(content.key_findings, "No findings were recorded."))
    lines.extend(["", "## Warnings"])
    lines.extend(_bullets(content.warnings, "None."))
    return lines


__all__ = [
    "CheckTally",
    "RunContext",
    "RunResult",
    "RunStatus",
    "SummaryContent",
    "build_summary_lines",
    "create_run",
    "finalize_run",
    "list_output_files",
]

"""Tests for standardized run writer."""

import json
from pathlib import Path

from mathbook.application.run_writer import (
    CheckTally,
    SummaryContent,
    build_summary_lines,
    create_run,
    finalize_run,
    list_output_files,
)


def test_run_writer_creates_manifest_and_summary(tmp_path: Path) -> None:
    ctx = create_run(
        "unit-test-capability",
        inputs={"modules": "all"},
        reports_root=tmp_path,
    )
    data_file = ctx.output_dir / "checks.csv"
    data_file.write_text("module,check\nnt,gcd\n", encoding="utf-8")

    result = finalize_run(
        ctx,
        status="success",
        output_files=list_output_files(ctx.output_dir),
        summary_lines=["# Unit", "- ok"],
    )

    assert result.output_dir.exists()
    assert result.manifest_path.exists()
    assert result.summary_path.exists()
    assert data_file in result.output_files
    assert "unit-test-capability" in result.manifest_path.read_text(encoding="utf-8")


def test_run_directory_layout_and_manifest_fields(tmp_path: Path) -> None:
    ctx = create_run(
        "verify", inputs={"modules": "crypto"}, reports_root=tmp_path, run_id="run1"
    )
    assert ctx.output_dir == tmp_path / "verify" / "run1"

    result = finalize_run(
        ctx,
        status="failed",
        output_files=(),
        summary_lines=["# Verify"],
        error="1 check(s) failed",
    )

    manifest = json.loads(result.manifest_path.read_text(encoding="utf-8"))
    assert manifest["status"] == "failed"
    assert manifest["error"] == "1 check(s) failed"
    assert manifest["inputs"] == {"modules": "crypto"}
    assert manifest["outputs"] == ["summary.md", "manifest.json"]
    assert set(manifest) == {
        "capability",
        "error",
        "finished_at",
        "inputs",
        "outputs",
        "run_id",
        "started_at",
        "status",
    }


def test_summary_lines_include_check_tally() -> None:
    content = SummaryContent(
        title="Worked Example Verification",
        key_findings=["all good"],
        inputs={"modules": "all"},
        tally=CheckTally(passed=40, failed=2),
    )
    lines = build_summary_lines(content, "verify", (Path("checks.csv"),))
    assert lines[0] == "# Worked Example Verification"
    assert "- `modules`: `all`" in lines
    assert "- `checks.csv`" in lines
    assert "- passed: 40 of 42" in lines
    assert "- failed: 2" in lines
    assert lines[-1] == "- None."

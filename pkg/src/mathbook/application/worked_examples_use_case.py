"""Worked-example verification use-case."""

from pathlib import Path
from typing import NamedTuple

from mathbook.application.run_writer import CheckTally, RunResult, SummaryContent
from mathbook.application.use_case_utils import (
    ReportSpec,
    finalize_report,
    render_stdout_with_tempdir,
    start_report,
)
from mathbook.application.worked_examples_service import (
    VerifyReport,
    verify_worked_examples,
)

_SPEC = ReportSpec(
    capability="verify",
    title="Worked Example Verification",
    temp_prefix="mathbook_verify_",
    findings=("Known golden values replayed against every module.",),
)


class VerifyOutcome(NamedTuple):
    run: RunResult | None
    passed: int
    failed: int


def _summary(report: VerifyReport, inputs: dict[str, object]) -> SummaryContent:
    failures = [
        f"{o.module}: {o.check} (expected {o.expected}, got {o.actual})"
        for o in report.outcomes
        if not o.passed
    ]
    return SummaryContent(
        title=_SPEC.title,
        key_findings=list(_SPEC.findings),
        warnings=failures,
        inputs=dict(inputs),
        tally=CheckTally(report.passed, report.failed),
    )


def execute_verify(
    *,
    reports_root: Path | None = None,
    modules: tuple[str, ...] | None = None,
) -> VerifyOutcome:
    """Replay the worked examples.

    Without ``reports_root`` the step log and ``checks.csv`` are previewed in the
    terminal and discarded. With it, they are kept under
    ``<reports_root>/verify/<YYYYMMDD_HHMMSS>/`` next to ``summary.md`` and
    ``manifest.json``; the run status is ``failed`` when any check failed.
    """
    if reports_root is None:
        report = render_stdout_with_tempdir(
            title=_SPEC.title,
            temp_prefix=_SPEC.temp_prefix,
            runner=lambda data_dir: verify_worked_examples(
                data_dir=data_dir, modules=modules
            ),
        )
        return VerifyOutcome(None, report.passed, report.failed)

    inputs: dict[str, object] = {"modules": ",".join(modules) if modules else "all"}
    ctx = start_report(_SPEC, reports_root=reports_root, inputs=inputs)
    report = verify_worked_examples(data_dir=ctx.output_dir, modules=modules)
    run = finalize_report(
        ctx,
        summary=_summary(report, inputs),
        status="failed" if report.failed else "success",
        error=f"{report.failed} check(s) failed" if report.failed else None,
    )
    return VerifyOutcome(run, report.passed, report.failed)


__all__ = ["VerifyOutcome", "execute_verify"]

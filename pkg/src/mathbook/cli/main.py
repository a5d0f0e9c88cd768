"""CLI entrypoint for the mathbook toolkit."""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version
from pathlib import Path

import typer

from mathbook.application import execute_verify
from mathbook.cli import applied, comb, crypto, cx, img, info, la, nt, poly
from mathbook.cli._common import config_of, console, err_console, handle_errors
from mathbook.config import ConfigError, load_config

app = typer.Typer(
    name="mathbook",
    help="Computational maths toolkit: exact arithmetic, codes, ciphers and fits.",
    no_args_is_help=True,
    add_completion=False,
    invoke_without_command=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)

app.add_typer(nt.app, name="nt")
app.add_typer(comb.app, name="comb")
app.add_typer(info.app, name="info")
app.add_typer(la.app, name="la")
app.add_typer(poly.app, name="poly")
app.add_typer(crypto.app, name="crypto")
app.add_typer(cx.app, name="cx")
app.add_typer(applied.nav_app, name="nav")
app.add_typer(applied.geo_app, name="geo")
app.add_typer(applied.phys_app, name="phys")
app.add_typer(img.app, name="img")


def _resolve_version() -> str:
    """Return installed package version or local fallback."""
    try:
        return package_version("mathbook")
    except PackageNotFoundError:
        return "0.1.0"


@app.callback()
def callback(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        help="Show version and exit.",
    ),
) -> None:
    """Handle global CLI options and load configuration."""
    if version:
        console.print(f"mathbook {_resolve_version()}")
        raise typer.Exit(code=0)
    try:
        ctx.obj = load_config()
    except ConfigError as exc:
        err_console.print(f"ERROR: {exc}", markup=False)
        raise typer.Exit(code=1) from exc
    if ctx.invoked_subcommand is None:
        raise typer.Exit(code=0)


@app.command("verify")
def verify_command(
    ctx: typer.Context,
    report: Path | None = typer.Option(
        None,
        "--report",
        "-r",
        help=(
            "Persist report files under this directory. "
            "If omitted, prints stdout preview only."
        ),
    ),
    save: bool = typer.Option(
        False,
        "--save",
        help="Persist under MATHBOOK_REPORTS_ROOT (default `reports`).",
    ),
    module: list[str] | None = typer.Option(
        None,
        "--module",
        "-m",
        help="Only replay this module's examples; repeatable.",
    ),
) -> None:
    """Replay the worked examples against every module.

    Prints rich preview by default; use `--report/-r` or `--save` to persist
    `checks.csv`, `summary.md` and `manifest.json`. Exits 1 if any check fails.
    """
    reports_root = report
    if reports_root is None and save:
        reports_root = config_of(ctx).reports_root
    with handle_errors():
        outcome = execute_verify(
            reports_root=reports_root,
            modules=tuple(module) if module else None,
        )
    if outcome.run is not None:
        console.print(f"[green]Run:[/green] {outcome.run.output_dir}")
    console.print(f"{outcome.passed} passed, {outcome.failed} failed")
    if outcome.failed:
        raise typer.Exit(code=1)


def main() -> None:
    """Project entrypoint for `mathbook` script."""
    app()


if __name__ == "__main__":
    main()

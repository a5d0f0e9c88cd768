"""Render preview-mode artifacts to the terminal with rich."""

import csv
from pathlib import Path

from rich import box
from rich.console import Console, JustifyMethod
from rich.panel import Panel
from rich.syntax import Syntax
from rich.table import Table
from rich.text import Text

_MAX_PREVIEW_ROWS = 20
_STATUS_STYLES = {"pass": "green", "fail": "red"}


def _is_numeric_column(values: list[str]) -> bool:
    seen = False
    for raw in values:
        value = raw.strip()
        if not value:
            continue
        seen = True
        try:
            float(value)
        except ValueError:
            return False
    return seen


def _styled(header: str, value: str) -> Text:
    style = _STATUS_STYLES.get(value) if header == "status" else None
    return Text(value, style=style or "")


def _render_csv(console: Console, file_path: Path) -> None:
    with file_path.open("r", encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows:
        console.print(f"[yellow]{file_path.name} is empty[/yellow]")
        return

    headers, body = rows[0], rows[1:]
    table = Table(title=file_path.name, expand=True, box=box.SIMPLE_HEAVY)
    for index, header in enumerate(headers):
        column = [row[index] if index < len(row) else "" for row in body]
        justify: JustifyMethod = "right" if _is_numeric_column(column) else "left"
        table.add_column(header, overflow="fold", justify=justify)

    for row in body[:_MAX_PREVIEW_ROWS]:
        padded = row + [""] * (len(headers) - len(row))
        table.add_row(*(_styled(h, v) for h, v in zip(headers, padded, strict=True)))

    console.print(table)
    if len(body) > _MAX_PREVIEW_ROWS:
        console.print(
            f"[dim]Showing first {_MAX_PREVIEW_ROWS} of {len(body)} rows.[/dim]"
        )


def _render_text_like(console: Console, file_path: Path) -> None:
    text = file_path.read_text(encoding="utf-8")
    lexer = "json" if file_path.suffix == ".json" else "markdown"
    console.print(
        Panel(
            Syntax(text, lexer=lexer, line_numbers=False, word_wrap=True),
            title=file_path.name,
        )
    )


def render_stdout_report(
    *,
    title: str,
    captured_stdout: str,
    output_files: tuple[Path, ...],
    console: Console | None = None,
) -> None:
    """Print the captured step log in a panel, then preview each artifact."""
    console = console or Console()
    console.print(f"[bold cyan]{title}[/bold cyan]")

    if captured_stdout.strip():
        console.print(
            Panel(
                Text(captured_stdout.strip()),
                title="Execution Log",
                border_style="blue",
            )
        )

    if not output_files:
        console.print("[dim]No output files were generated.[/dim]")
        return

    for file_path in output_files:
        match file_path.suffix.lower():
            case ".csv":
                _render_csv(console, file_path)
            case ".md" | ".json":
                _render_text_like(console, file_path)
            case _:
                console.print(f"[dim]Generated file: {file_path.name}[/dim]")


__all__ = ["render_stdout_report"]

"""Consoles, output and error mapping shared by every command group."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer
from rich.console import Console

from mathbook.application import emit_json, render_plain
from mathbook.config import MathbookConfig
from mathbook.domain.errors import MathbookError
from mathbook.domain.imaging import Image, parse_image, pgm_read
from mathbook.infrastructure.files import read_bytes, read_inline_or_file

console = Console(highlight=False, emoji=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, emoji=False, soft_wrap=True)

PGM_SUFFIX = ".pgm"


def json_option() -> Any:
    return typer.Option(False, "--json", help="Print the result as canonical JSON.")


def config_of(ctx: typer.Context) -> MathbookConfig:
    """The config loaded by the root callback, or defaults outside of it."""
    obj = ctx.find_root().obj
    return obj if isinstance(obj, MathbookConfig) else MathbookConfig()


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map failures to exit codes.

    Domain errors print ``<code>: <message>`` and exit 1; other ``ValueError``
    exit 1; ``RuntimeError`` (unreadable sources, unwritable artifacts) exit 2.
    """
    try:
        yield
    except (typer.Exit, typer.Abort):
        raise
    except MathbookError as exc:
        err_console.print(f"{exc.code}: {exc}", markup=False)
        raise typer.Exit(code=1) from exc
    except ValueError as exc:
        err_console.print(f"ERROR: {exc}", markup=False)
        raise typer.Exit(code=1) from exc
    except RuntimeError as exc:
        err_console.print(f"ERROR: {exc}", markup=False)
        raise typer.Exit(code=2) from exc


def emit(
    ctx: typer.Context, value: Any, as_json: bool, *, text: str | None = None
) -> None:
    """Print ``value`` as canonical JSON or plain text.

    ``text`` overrides the default plain rendering.
    """
    if as_json:
        console.print(emit_json(value), markup=False)
        return
    if text is None:
        text = render_plain(value, config_of(ctx).output.float_digits)
    console.print(text, markup=False)


def read_text_arg(value: str) -> str:
    """Literal text, ``-`` for stdin, or the path of a text file."""
    return read_inline_or_file(value)


def read_message_arg(value: str) -> str:
    """Like :func:`read_text_arg`, minus the line break a file or pipe leaves behind."""
    return read_inline_or_file(value).strip()


def load_image(source: str) -> Image:
    """A ``.pgm`` file, or an image in the matrix text format (inline, file, stdin)."""
    path = Path(source)
    if path.suffix.lower() == PGM_SUFFIX and path.is_file():
        return pgm_read(read_bytes(path))
    return parse_image(read_inline_or_file(source))


__all__ = [
    "config_of",
    "console",
    "emit",
    "err_console",
    "handle_errors",
    "json_option",
    "load_image",
    "read_message_arg",
    "read_text_arg",
]

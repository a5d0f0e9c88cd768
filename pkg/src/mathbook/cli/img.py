"""`mathbook img`: binary and grayscale image transforms."""

from pathlib import Path

import typer

from mathbook.application import export_blend_frames
from mathbook.cli._common import (
    config_of,
    console,
    emit,
    handle_errors,
    json_option,
    load_image,
)
from mathbook.domain import imaging
from mathbook.domain.errors import InvalidInputError
from mathbook.infrastructure.files import read_bytes, write_bytes

app = typer.Typer(help="Image transforms and PGM export.", no_args_is_help=True)

IMAGE_HELP = "A .pgm file, matrix text ('0 1; 1 0'), a text file, or - for stdin."


@app.command("flip")
def flip_command(
    ctx: typer.Context,
    img: str = typer.Argument(..., help=IMAGE_HELP),
    as_json: bool = json_option(),
) -> None:
    """Mirror left to right."""
    with handle_errors():
        emit(ctx, imaging.flip_horizontal(load_image(img)), as_json)


@app.command("transpose")
def transpose_command(
    ctx: typer.Context,
    img: str = typer.Argument(..., help=IMAGE_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, imaging.transpose_image(load_image(img)), as_json)


@app.command("negate")
def negate_command(
    ctx: typer.Context,
    img: str = typer.Argument(..., help=IMAGE_HELP),
    as_json: bool = json_option(),
) -> None:
    """Swap black and white in a binary image."""
    with handle_errors():
        emit(ctx, imaging.negate(load_image(img)), as_json)


@app.command("window")
def window_command(
    ctx: typer.Context,
    img: str = typer.Argument(..., help=IMAGE_HELP),
    top: int = typer.Argument(..., help="First kept row (1-based)."),
    left: int = typer.Argument(..., help="First kept column (1-based)."),
    bottom: int = typer.Argument(..., help="Last kept row, inclusive."),
    right: int = typer.Argument(..., help="Last kept column, inclusive."),
    as_json: bool = json_option(),
) -> None:
    """Keep a rectangle and black out the rest."""
    with handle_errors():
        emit(ctx, imaging.window(load_image(img), top, left, bottom, right), as_json)


@app.command("blend")
def blend_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=IMAGE_HELP),
    b: str = typer.Argument(..., help=IMAGE_HELP),
    t: float | None = typer.Argument(None, help="Weight of B, in [0, 1]."),
    steps: int | None = typer.Option(
        None, "--steps", help="Write STEPS + 1 frames instead of a single blend."
    ),
    out: Path | None = typer.Option(
        None, "--out", help="Directory for the frames written by --steps."
    ),
    as_json: bool = json_option(),
) -> None:
    """(1 - T) A + T B, or an animation from A to B with --steps and --out."""
    with handle_errors():
        first, second = load_image(a), load_image(b)
        if steps is None:
            if t is None:
                raise InvalidInputError("give T, or --steps with --out")
            emit(ctx, imaging.blend(first, second, t), as_json)
            return
        if out is None:
            raise InvalidInputError("--steps needs --out DIR")
        frames = export_blend_frames(
            first, second, steps=steps, out_dir=out, maxval=config_of(ctx).pgm_maxval
        )
        emit(
            ctx,
            [str(path) for path in frames],
            as_json,
            text="\n".join(str(path) for path in frames),
        )


@app.command("topgm")
def topgm_command(
    ctx: typer.Context,
    img: str = typer.Argument(..., help=IMAGE_HELP),
    maxval: int | None = typer.Option(
        None, "--maxval", help="Largest gray level (defaults to config)."
    ),
    out: Path | None = typer.Option(
        None, "--out", "-o", help="Write here instead of stdout."
    ),
) -> None:
    """Export as plain PGM (P2)."""
    with handle_errors():
        level = maxval if maxval is not None else config_of(ctx).pgm_maxval
        data = imaging.pgm_write(load_image(img), level)
        if out is None:
            console.print(data.decode("ascii").rstrip("\n"), markup=False)
            return
        write_bytes(out, data)
        console.print(str(out), markup=False)


@app.command("frompgm")
def frompgm_command(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="A plain PGM (P2) file."),
    as_json: bool = json_option(),
) -> None:
    """Read a PGM file into intensities in [0, 1]."""
    with handle_errors():
        emit(ctx, imaging.pgm_read(read_bytes(path)), as_json)


__all__ = ["app"]

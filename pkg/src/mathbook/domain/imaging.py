"""Grayscale images as matrices of intensities in ``[0, 1]``.

Pixel ``(1, 1)`` is the top-left corner. Binary images use only 0 (black) and
1 (white). Plain PGM (P2) is the exchange format.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from mathbook.domain.errors import (
    BadRectangleError,
    BadTError,
    DimensionMismatchError,
    InvalidInputError,
    MalformedPgmError,
    NonBinaryError,
)
from mathbook.domain.literals import parse_matrix

type Pixels = npt.NDArray[np.float64]

PGM_MAGIC = "P2"
PGM_MAX_MAXVAL = 65535
DEFAULT_MAXVAL = 255

_COMMENT = re.compile(r"#[^\n]*")


@dataclass(frozen=True, eq=False)
class Image:
    """Read-only 2-D array of intensities."""

    pixels: Pixels

    def __post_init__(self) -> None:
        array = np.array(self.pixels, dtype=np.float64)
        if array.ndim != 2 or array.size == 0:
            raise DimensionMismatchError("an image needs at least one row and column")
        if not np.all((array >= 0) & (array <= 1)):
            raise InvalidInputError("intensities must lie in [0, 1]")
        array.flags.writeable = False
        object.__setattr__(self, "pixels", array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return bool(np.array_equal(self.pixels, other.pixels))

    __hash__ = None  # type: ignore[assignment]

    @property
    def shape(self) -> tuple[int, int]:
        rows, cols = self.pixels.shape
        return int(rows), int(cols)

    @property
    def is_binary(self) -> bool:
        return bool(np.all((self.pixels == 0) | (self.pixels == 1)))

    def rows(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(float(x) for x in row) for row in self.pixels)


def image_from_rows(rows: Iterable[Iterable[Any]]) -> Image:
    materialized = [[float(x) for x in row] for row in rows]
    widths = {len(row) for row in materialized}
    if len(widths) > 1:
        raise DimensionMismatchError("all image rows must have the same length")
    return Image(np.array(materialized, dtype=np.float64))


def binary_image(rows: Iterable[Iterable[Any]]) -> Image:
    """Build an image and require every pixel to be 0 or 1."""
    img = image_from_rows(rows)
    _require_binary(img)
    return img


def parse_image(text: str) -> Image:
    """Read an image written in the matrix text format."""
    return image_from_rows(parse_matrix(text).rows)


def _require_binary(img: Image) -> None:
    if not img.is_binary:
        raise NonBinaryError("operation needs a binary (0/1) image")


def _format_intensity(value: float) -> str:
    return str(int(value)) if value.is_integer() else f"{value:g}"


def format_image(img: Image) -> str:
    """Matrix text format: one row per line, entries separated by spaces."""
    return "\n".join(
        " ".join(_format_intensity(float(x)) for x in row) for row in img.pixels
    )


def flip_horizontal(img: Image) -> Image:
    """Reverse the column order, ``out[i][j] = in[i][cols + 1 - j]``."""
    return Image(img.pixels[:, ::-1])


def transpose_image(img: Image) -> Image:
    return Image(img.pixels.T)


def negate(img: Image) -> Image:
    """Add 1 modulo 2 to every pixel of a binary image."""
    _require_binary(img)
    return Image(np.mod(img.pixels + 1, 2))


def window_mask(
    shape: tuple[int, int], top: int, left: int, bottom: int, right: int
) -> Image:
    """0/1 mask that is 1 inside the 1-based inclusive rectangle."""
    rows, cols = shape
    if not (1 <= top <= bottom <= rows and 1 <= left <= right <= cols):
        raise BadRectangleError(
            f"rectangle rows {top}..{bottom}, cols {left}..{right} "
            f"does not fit a {rows}x{cols} image"
        )
    mask = np.zeros(shape, dtype=np.float64)
    mask[top - 1 : bottom, left - 1 : right] = 1
    return Image(mask)


def window(img: Image, top: int, left: int, bottom: int, right: int) -> Image:
    """Black out everything outside the rectangle (entrywise product with a mask)."""
    mask = window_mask(img.shape, top, left, bottom, right)
    return Image(img.pixels * mask.pixels)


def blend(a: Image, b: Image, t: float) -> Image:
    """Convex combination ``(1 - t) A + t B``."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"image shapes differ: {a.shape} vs {b.shape}")
    if not 0 <= t <= 1:
        raise BadTError(f"t must be in [0, 1], got {t}")
    return Image(np.clip((1 - t) * a.pixels + t * b.pixels, 0.0, 1.0))


def blend_frames(a: Image, b: Image, steps: int) -> list[Image]:
    """``steps + 1`` frames for ``t = 0, 1/steps, ..., 1``."""
    if steps < 1:
        raise InvalidInputError(f"steps must be >= 1, got {steps}")
    return [blend(a, b, i / steps) for i in range(steps + 1)]


def _check_maxval(maxval: int) -> None:
    if not 1 <= maxval <= PGM_MAX_MAXVAL:
        raise InvalidInputError(f"maxval must be in 1..{PGM_MAX_MAXVAL}, got {maxval}")


def quantize(img: Image, maxval: int = DEFAULT_MAXVAL) -> npt.NDArray[np.int64]:
    """Map intensity ``x`` to ``floor(x * maxval + 0.5)``."""
    _check_maxval(maxval)
    return np.floor(img.pixels * maxval + 0.5).astype(np.int64)


def pgm_write(img: Image, maxval: int = DEFAULT_MAXVAL) -> bytes:
    levels = quantize(img, maxval)
    rows, cols = img.shape
    lines = [PGM_MAGIC, f"{cols} {rows}", str(maxval)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in levels)
    return ("\n".join(lines) + "\n").encode("ascii")


def _pgm_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise MalformedPgmError(f"{what} is not an integer: {token!r}") from exc


def pgm_read(data: bytes) -> Image:
    """Parse a plain PGM stream; comments start with ``#``."""
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise MalformedPgmError("PGM P2 data must be ASCII") from exc
    tokens = _COMMENT.sub(" ", text).split()
    if len(tokens) < 4 or tokens[0] != PGM_MAGIC:
        raise MalformedPgmError("missing P2 header")
    width = _pgm_int(tokens[1], "width")
    height = _pgm_int(tokens[2], "height")
    maxval = _pgm_int(tokens[3], "maxval")
    if width < 1 or height < 1 or not 1 <= maxval <= PGM_MAX_MAXVAL:
        raise MalformedPgmError(f"bad header {width}x{height} maxval {maxval}")
    body = tokens[4:]
    if len(body) != width * height:
        raise MalformedPgmError(
            f"expected {width * height} samples, found {len(body)}"
        )
    samples = np.array([_pgm_int(t, "sample") for t in body], dtype=np.int64)
    if np.any((samples < 0) | (samples > maxval)):
        raise MalformedPgmError(f"samples must lie in 0..{maxval}")
    return Image(samples.reshape(height, width) / maxval)


__all__ = [
    "DEFAULT_MAXVAL",
    "Image",
    "Pixels",
    "binary_image",
    "blend",
    "blend_frames",
    "flip_horizontal",
    "format_image",
    "image_from_rows",
    "negate",
    "parse_image",
    "pgm_read",
    "pgm_write",
    "quantize",
    "transpose_image",
    "window",
    "window_mask",
]

"""Tests for image transforms and PGM exchange."""

from __future__ import annotations

import random
from pathlib import Path

import numpy as np
import pytest

from mathbook.domain.errors import (
    BadRectangleError,
    BadTError,
    DimensionMismatchError,
    MalformedPgmError,
    NonBinaryError,
)
from mathbook.domain.imaging import (
    Image,
    binary_image,
    blend,
    blend_frames,
    flip_horizontal,
    format_image,
    image_from_rows,
    negate,
    parse_image,
    pgm_read,
    pgm_write,
    transpose_image,
    window,
    window_mask,
)

FIXTURES = Path(__file__).parent / "fixtures"


def _fixture(name: str) -> Image:
    return parse_image((FIXTURES / name).read_text(encoding="utf-8"))


def test_fixtures_are_binary_squares() -> None:
    felix = _fixture("felix.txt")
    assert felix.shape == (35, 35)
    assert felix.is_binary
    assert _fixture("kitty.txt").shape == (35, 35)


def test_involutions() -> None:
    felix = _fixture("felix.txt")
    assert flip_horizontal(flip_horizontal(felix)) == felix
    assert transpose_image(transpose_image(felix)) == felix
    assert negate(negate(felix)) == felix


def test_flip_reverses_columns() -> None:
    img = parse_image("1 0 0; 0 1 1")
    assert flip_horizontal(img) == parse_image("0 0 1; 1 1 0")
    assert transpose_image(img) == parse_image("1 0; 0 1; 0 1")


def test_negate_needs_binary_pixels() -> None:
    assert negate(parse_image("1 0; 0 1")) == parse_image("0 1; 1 0")
    with pytest.raises(NonBinaryError):
        negate(parse_image("0.5 1"))


def test_window_matches_mask_product() -> None:
    felix = _fixture("felix.txt")
    windowed = window(felix, 3, 3, 12, 30)
    mask = np.zeros((35, 35))
    mask[2:12, 2:30] = 1
    assert windowed == Image(felix.pixels * mask)
    assert window(felix, 1, 1, 35, 35) == felix
    assert window(windowed, 3, 3, 12, 30) == windowed


def test_single_pixel_window() -> None:
    img = parse_image("1 1; 1 1")
    assert window(img, 2, 1, 2, 1) == parse_image("0 0; 1 0")
    assert window_mask((2, 2), 1, 2, 1, 2) == parse_image("0 1; 0 0")
    with pytest.raises(BadRectangleError):
        window(img, 1, 1, 3, 1)


def test_blend_endpoints_and_midpoint() -> None:
    felix, kitty = _fixture("felix.txt"), _fixture("kitty.txt")
    assert blend(felix, kitty, 0) == felix
    assert blend(felix, kitty, 1) == kitty
    half = blend(parse_image("0 1"), parse_image("1 1"), 0.5)
    assert half == parse_image("0.5 1")
    with pytest.raises(BadTError):
        blend(felix, kitty, 1.5)
    with pytest.raises(DimensionMismatchError):
        blend(felix, parse_image("0 1"), 0.5)


def test_blend_frames() -> None:
    frames = blend_frames(parse_image("0"), parse_image("1"), 4)
    assert [float(f.pixels[0, 0]) for f in frames] == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_pgm_header_and_round_trip() -> None:
    felix = _fixture("felix.txt")
    data = pgm_write(felix)
    assert data.startswith(b"P2\n35 35\n255\n")
    assert len(data.split()) == 4 + 35 * 35
    assert pgm_read(data) == felix


def test_pgm_quantizes_gradients() -> None:
    gradient = parse_image("0 0.25; 0.5 1")
    text = pgm_write(gradient, 4).decode("ascii")
    assert text == "P2\n2 2\n4\n0 1\n2 4\n"
    assert pgm_read(text.encode("ascii")) == gradient


def test_pgm_read_skips_comments() -> None:
    assert pgm_read(b"P2\n# made by hand\n2 1\n1\n0 1\n") == parse_image("0 1")


def test_malformed_pgm() -> None:
    with pytest.raises(MalformedPgmError):
        pgm_read(b"P2\n2 2\n255\n0 1 2\n")
    with pytest.raises(MalformedPgmError):
        pgm_read(b"P5\n1 1\n255\n0\n")
    with pytest.raises(MalformedPgmError):
        pgm_read(b"P2\n1 1\n1\n2\n")


def test_format_image() -> None:
    assert format_image(parse_image("1 0; 0.5 1")) == "1 0\n0.5 1"


def test_transforms_undo_themselves_on_random_images() -> None:
    rng = random.Random(29)
    for _ in range(50):
        n_rows, n_cols = rng.randint(1, 8), rng.randint(1, 8)
        bits = binary_image(
            [[rng.randint(0, 1) for _ in range(n_cols)] for _ in range(n_rows)]
        )
        grey = image_from_rows(
            [[rng.random() for _ in range(n_cols)] for _ in range(n_rows)]
        )
        assert negate(negate(bits)) == bits
        assert negate(flip_horizontal(bits)) == flip_horizontal(negate(bits))
        for img in (bits, grey):
            assert flip_horizontal(flip_horizontal(img)) == img
            assert transpose_image(transpose_image(img)) == img
            assert transpose_image(img).shape == (n_cols, n_rows)

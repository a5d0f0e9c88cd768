"""Export a blend sequence between two images as numbered PGM frames."""

from pathlib import Path

from mathbook.domain.imaging import DEFAULT_MAXVAL, Image, blend_frames, pgm_write
from mathbook.infrastructure.files import write_bytes

FRAME_TEMPLATE = "frame_{index:03d}.pgm"


def export_blend_frames(
    a: Image,
    b: Image,
    *,
    steps: int,
    out_dir: Path,
    maxval: int = DEFAULT_MAXVAL,
) -> list[Path]:
    """Write ``steps + 1`` frames ``frame_000.pgm`` .. into ``out_dir``.

    Frame ``i`` is ``(1 - t) A + t B`` with ``t = i / steps``.
    """
    frames = blend_frames(a, b, steps)
    return [
        write_bytes(
            out_dir / FRAME_TEMPLATE.format(index=index), pgm_write(frame, maxval)
        )
        for index, frame in enumerate(frames)
    ]


__all__ = ["FRAME_TEMPLATE", "export_blend_frames"]

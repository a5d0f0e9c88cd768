"""Application facade exports for the CLI."""

from mathbook.application.blend_export_service import export_blend_frames
from mathbook.application.json_output import decode_json, emit_json, to_jsonable
from mathbook.application.plain_output import render_plain
from mathbook.application.run_writer import RunResult
from mathbook.application.worked_examples_use_case import VerifyOutcome, execute_verify

__all__ = [
    "RunResult",
    "VerifyOutcome",
    "decode_json",
    "emit_json",
    "execute_verify",
    "export_blend_frames",
    "render_plain",
    "to_jsonable",
]

"""Canonical JSON encoding of library results.

Rationals become ``{"num": .., "den": ..}`` and complex values
``{"re": .., "im": ..}``; matrices are row arrays, polynomials ascending
coefficient arrays, records are objects keyed by field name. Keys are sorted.
"""

import dataclasses
import json
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from mathbook.domain.complexnum import ExactComplex
from mathbook.domain.imaging import Image
from mathbook.domain.matrix import Matrix
from mathbook.domain.polynomials import Polynomial


def to_jsonable(value: Any) -> Any:
    """Convert a result into plain JSON types."""
    match value:
        case None | bool() | str():
            return value.value if isinstance(value, Enum) else value
        case int():
            return value
        case Fraction():
            return {"num": value.numerator, "den": value.denominator}
        case float():
            return value
        case complex():
            return {"re": value.real, "im": value.imag}
        case ExactComplex():
            return {"re": to_jsonable(value.re), "im": to_jsonable(value.im)}
        case Matrix():
            return [[to_jsonable(x) for x in row] for row in value.rows]
        case Polynomial():
            return [to_jsonable(c) for c in value.coefficients]
        case Image():
            return value.pixels.tolist()
        case Path():
            return str(value)
        case np.generic():
            return value.item()
        case np.ndarray():
            return value.tolist()
        case Enum():
            return to_jsonable(value.value)
        case tuple() if hasattr(value, "_fields"):
            return {name: to_jsonable(getattr(value, name)) for name in value._fields}
        case list() | tuple():
            return [to_jsonable(item) for item in value]
        case Mapping():
            return {str(key): to_jsonable(item) for key, item in value.items()}
        case _ if dataclasses.is_dataclass(value) and not isinstance(value, type):
            return {
                field.name: to_jsonable(getattr(value, field.name))
                for field in dataclasses.fields(value)
            }
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


def emit_json(value: Any) -> str:
    """Serialize ``value`` deterministically."""
    return json.dumps(to_jsonable(value), sort_keys=True, ensure_ascii=False)


def _decode_object(obj: dict[str, Any]) -> Any:
    if obj.keys() == {"num", "den"}:
        return Fraction(obj["num"], obj["den"])
    if obj.keys() == {"re", "im"}:
        re, im = obj["re"], obj["im"]
        if isinstance(re, Fraction) and isinstance(im, Fraction):
            return ExactComplex(re, im)
        return complex(float(re), float(im))
    return obj


def decode_json(text: str) -> Any:
    """Parse canonical JSON back, restoring rationals and complex values."""
    return json.loads(text, object_hook=_decode_object)


__all__ = ["decode_json", "emit_json", "to_jsonable"]

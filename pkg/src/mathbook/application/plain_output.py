"""Plain-text rendering of library results for the console."""

import dataclasses
import math
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from typing import Any

from mathbook.domain.complexnum import ExactComplex, Polar
from mathbook.domain.imaging import Image, format_image
from mathbook.domain.matrix import Matrix
from mathbook.domain.polynomials import Polynomial, format_poly

DEFAULT_FLOAT_DIGITS = 10


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float, digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    text = f"{value:.{digits}g}"
    return "0" if text == "-0" else text


def _signed_imag(real: str, imag: str) -> str:
    if imag.startswith("-"):
        return f"{real}-{imag[1:]}i"
    return f"{real}+{imag}i"


def format_scalar(value: Any, digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    """One-line text for numbers, complex values and phasors."""
    match value:
        case bool():
            return "true" if value else "false"
        case int():
            return str(value)
        case Fraction():
            return format_fraction(value)
        case float():
            return format_float(value, digits)
        case complex():
            return _signed_imag(
                format_float(value.real, digits), format_float(value.imag, digits)
            )
        case ExactComplex():
            return _signed_imag(format_fraction(value.re), format_fraction(value.im))
        case Polar():
            degrees = format_float(math.degrees(value.argument), digits)
            radians = format_float(value.argument, digits)
            modulus = format_float(value.modulus, digits)
            return f"{modulus}∠{degrees}° ({radians} rad)"
        case Enum():
            return str(value.value)
        case None:
            return "none"
    return str(value)


def format_matrix(m: Matrix, digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    """Matrix text format, one row per line."""
    return "\n".join(" ".join(format_scalar(x, digits) for x in row) for row in m.rows)


def _is_record(value: Any) -> bool:
    if isinstance(value, tuple) and hasattr(value, "_fields"):
        return True
    return dataclasses.is_dataclass(value) and not isinstance(value, type)


def _record_items(value: Any) -> list[tuple[str, Any]]:
    if isinstance(value, tuple):
        return [(name, getattr(value, name)) for name in value._fields]
    return [(f.name, getattr(value, f.name)) for f in dataclasses.fields(value)]


def _labelled(label: str, text: str) -> str:
    if "\n" not in text:
        return f"{label}: {text}"
    indented = "\n".join(f"  {line}" for line in text.splitlines())
    return f"{label}:\n{indented}"


def render_plain(value: Any, digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    """Render a result; sequences print one item per line."""
    match value:
        case Matrix():
            return format_matrix(value, digits)
        case Polynomial():
            return format_poly(value)
        case Image():
            return format_image(value)
        case Polar() | ExactComplex():
            return format_scalar(value, digits)
        case str():
            return value
        case Mapping():
            return "\n".join(
                _labelled(str(k), render_plain(v, digits)) for k, v in value.items()
            )
        case _ if _is_record(value):
            return "\n".join(
                _labelled(name, render_plain(item, digits))
                for name, item in _record_items(value)
            )
        case list() | tuple():
            return "\n".join(render_plain(item, digits) for item in value)
    return format_scalar(value, digits)


__all__ = [
    "DEFAULT_FLOAT_DIGITS",
    "format_float",
    "format_fraction",
    "format_matrix",
    "format_scalar",
    "render_plain",
]

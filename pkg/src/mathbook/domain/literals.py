"""Parsers for the literal syntaxes accepted on the command line.

Matrices are written row by row, rows separated by ``;`` or newlines and entries
by spaces or commas: ``"3 2; 5 3"``. Scalars may be integers, decimals or
``p/q`` fractions and are always read as exact rationals.
"""

import re
from fractions import Fraction

from mathbook.domain.complexnum import (
    ExactComplex,
    Polar,
    phasor,
    principal_argument,
)
from mathbook.domain.errors import ParseError
from mathbook.domain.matrix import Matrix
from mathbook.domain.polynomials import Polynomial

_ROW_SEPARATOR = re.compile(r"[;\n]")
_ENTRY_SEPARATOR = re.compile(r"[\s,]+")
_LIST_SEPARATOR = re.compile(r"[\s,;]+")
_POLY_TERM = re.compile(r"[+-]?[^+-]+")
_DEGREE_SUFFIXES = ("deg", "°")


def _normalize(text: str) -> str:
    return text.strip().replace("−", "-")


def parse_scalar(text: str) -> Fraction:
    """Read ``"-3"``, ``"1.25"`` or ``"7/4"`` as an exact rational."""
    cleaned = _normalize(text)
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a number: {text!r}") from exc


def parse_int(text: str) -> int:
    value = parse_scalar(text)
    if value.denominator != 1:
        raise ParseError(f"expected an integer, got {text!r}")
    return value.numerator


def _split(pattern: re.Pattern[str], text: str) -> list[str]:
    return [token for token in pattern.split(_normalize(text)) if token]


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Entries separated by spaces, commas or semicolons."""
    tokens = _split(_LIST_SEPARATOR, text)
    if not tokens:
        raise ParseError("empty vector")
    return tuple(parse_scalar(token) for token in tokens)


def parse_int_list(text: str) -> list[int]:
    return [parse_int(token) for token in _split(_LIST_SEPARATOR, text)]


def parse_matrix(text: str) -> Matrix:
    rows = [
        tuple(parse_scalar(entry) for entry in _split(_ENTRY_SEPARATOR, line))
        for line in _ROW_SEPARATOR.split(_normalize(text))
        if line.strip()
    ]
    if not rows:
        raise ParseError("empty matrix")
    return Matrix(tuple(rows))


def parse_points(text: str) -> list[tuple[Fraction, Fraction]]:
    """Points written ``x:y`` and separated by spaces, commas or semicolons."""
    points: list[tuple[Fraction, Fraction]] = []
    for token in _split(_LIST_SEPARATOR, text):
        x, sep, y = token.partition(":")
        if not sep:
            raise ParseError(f"point {token!r} is not written x:y")
        points.append((parse_scalar(x), parse_scalar(y)))
    if not points:
        raise ParseError("no points given")
    return points


def _split_complex(body: str) -> tuple[str, str]:
    for index in range(len(body) - 1, 0, -1):
        if body[index] in "+-" and body[index - 1] not in "eE":
            return body[:index], body[index:]
    return "0", body


def parse_complex(text: str) -> ExactComplex:
    """Binomial form ``a+bi``; ``j`` may stand for ``i`` and a part may be omitted."""
    cleaned = _normalize(text).replace(" ", "").replace("j", "i")
    if not cleaned:
        raise ParseError("empty complex literal")
    if not cleaned.endswith("i"):
        return ExactComplex(parse_scalar(cleaned))
    real, imag = _split_complex(cleaned[:-1])
    if imag.rstrip("*") in ("", "+", "-"):
        imag = imag.rstrip("*") + "1"
    return ExactComplex(parse_scalar(real), parse_scalar(imag.rstrip("*")))


def parse_phasor(text: str, *, degrees: bool = False) -> Polar:
    """``M@ANGLE`` in radians, ``M@ANGLEdeg`` or ``M∠ANGLE`` in degrees.

    With ``degrees`` a bare ``M@ANGLE`` is read in degrees as well.
    """
    cleaned = _normalize(text).replace(" ", "")
    if "∠" in cleaned:
        magnitude, _, angle = cleaned.partition("∠")
        in_degrees = True
    else:
        magnitude, sep, angle = cleaned.partition("@")
        if not sep:
            raise ParseError(f"phasor {text!r} is not written M@ANGLE")
        in_degrees = degrees or angle.endswith(_DEGREE_SUFFIXES)
    for suffix in _DEGREE_SUFFIXES:
        angle = angle.removesuffix(suffix)
    modulus = float(parse_scalar(magnitude))
    if modulus < 0:
        raise ParseError(f"phasor magnitude must be non-negative, got {magnitude}")
    value = float(parse_scalar(angle))
    if in_degrees:
        return phasor(modulus, value)
    return Polar(modulus, principal_argument(value))


def _poly_term(term: str) -> tuple[int, Fraction]:
    if "x" not in term:
        return 0, parse_scalar(term)
    coefficient, _, power = term.partition("x")
    coefficient = coefficient.rstrip("*")
    if coefficient in ("", "+", "-"):
        coefficient += "1"
    exponent = 1
    if power:
        if not power.startswith("^"):
            raise ParseError(f"cannot read term {term!r}")
        exponent = parse_int(power[1:])
        if exponent < 0:
            raise ParseError(f"negative power in {term!r}")
    return exponent, parse_scalar(coefficient)


def parse_polynomial(text: str) -> Polynomial:
    """``"x^3 + 6*x - 20"`` or an ascending coefficient list ``"-20 6 0 1"``."""
    cleaned = _normalize(text).replace(" ", "").replace("**", "^").replace("X", "x")
    if not cleaned:
        raise ParseError("empty polynomial")
    if "x" not in cleaned:
        return Polynomial(parse_vector(text))
    coefficients: dict[int, Fraction] = {}
    for term in _POLY_TERM.findall(cleaned):
        power, value = _poly_term(term)
        coefficients[power] = coefficients.get(power, Fraction(0)) + value
    degree = max(coefficients)
    return Polynomial(
        tuple(coefficients.get(p, Fraction(0)) for p in range(degree + 1))
    )


__all__ = [
    "parse_complex",
    "parse_int",
    "parse_int_list",
    "parse_matrix",
    "parse_phasor",
    "parse_points",
    "parse_polynomial",
    "parse_scalar",
    "parse_vector",
]

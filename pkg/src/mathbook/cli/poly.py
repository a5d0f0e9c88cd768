"""`mathbook poly`: exact polynomial arithmetic and interpolation codes."""

from fractions import Fraction
from pathlib import Path

import typer

from mathbook.cli._common import emit, handle_errors, json_option, read_text_arg
from mathbook.domain import polynomials, reed_solomon
from mathbook.domain.errors import InvalidInputError, NotQuadraticError
from mathbook.domain.literals import (
    parse_points,
    parse_polynomial,
    parse_scalar,
    parse_vector,
)
from mathbook.domain.polynomials import Polynomial
from mathbook.infrastructure.files import read_points_csv

app = typer.Typer(help="Polynomials and Reed-Solomon codes.", no_args_is_help=True)

POLY_HELP = "Expression ('x^3 + 6*x - 20') or ascending coefficients ('-20 6 0 1')."
CODEWORD_HELP = "Received values, e.g. '1.2 -3.2 -5.4 -1.1 14 44.2 93.8 167.1'."


def _poly(text: str) -> Polynomial:
    return parse_polynomial(read_text_arg(text))


def _codeword(text: str) -> reed_solomon.RsCodeword:
    return reed_solomon.codeword(parse_vector(read_text_arg(text)))


@app.command("add")
def add_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, polynomials.poly_add(_poly(p), _poly(q)), as_json)


@app.command("sub")
def sub_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, polynomials.poly_sub(_poly(p), _poly(q)), as_json)


@app.command("mul")
def mul_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, polynomials.poly_mul(_poly(p), _poly(q)), as_json)


@app.command("divmod")
def divmod_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    """Quotient and remainder of P / Q."""
    with handle_errors():
        quotient, remainder = polynomials.poly_divmod(_poly(p), _poly(q))
        emit(ctx, {"quotient": quotient, "remainder": remainder}, as_json)


@app.command("gcd")
def gcd_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    """Monic greatest common divisor."""
    with handle_errors():
        emit(ctx, polynomials.poly_gcd(_poly(p), _poly(q)), as_json)


@app.command("lcm")
def lcm_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    q: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    """Monic least common multiple."""
    with handle_errors():
        emit(ctx, polynomials.poly_lcm(_poly(p), _poly(q)), as_json)


@app.command("eval")
def eval_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    x: str = typer.Argument(..., help="Point, e.g. 2 or 1/3."),
    as_json: bool = json_option(),
) -> None:
    """P(x) by Horner's rule."""
    with handle_errors():
        emit(ctx, polynomials.poly_eval(_poly(p), parse_scalar(x)), as_json)


@app.command("deriv")
def deriv_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=POLY_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, polynomials.poly_derivative(_poly(p)), as_json)


def _quadratic(text: str) -> tuple[Fraction, Fraction, Fraction]:
    p = _poly(text)
    if p.degree != 2:
        raise NotQuadraticError(f"expected degree 2, got degree {p.degree}")
    c, b, a = p.coefficients
    return a, b, c


@app.command("roots")
def roots_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help="A quadratic, e.g. 'x^2 - x - 1'."),
    as_json: bool = json_option(),
) -> None:
    """Both roots of a quadratic, exact when the discriminant is a square."""
    with handle_errors():
        a, b, c = _quadratic(p)
        emit(ctx, list(polynomials.quadratic_roots(a, b, c)), as_json)


@app.command("vertex")
def vertex_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help="A quadratic, e.g. 'x^2 - 6*x + 2'."),
    as_json: bool = json_option(),
) -> None:
    """Completed square a (x - h)^2 - k."""
    with handle_errors():
        a, b, c = _quadratic(p)
        emit(ctx, polynomials.complete_square(a, b, c), as_json)


@app.command("interp")
def interp_command(
    ctx: typer.Context,
    points: str | None = typer.Argument(None, help="Points written x:y."),
    csv: Path | None = typer.Option(None, "--csv", help="CSV with x and y columns."),
    as_json: bool = json_option(),
) -> None:
    """Lagrange interpolating polynomial through the points."""
    with handle_errors():
        if (points is None) == (csv is None):
            raise InvalidInputError("give either inline points or --csv")
        data = (
            read_points_csv(csv) if csv is not None else parse_points(points or "")
        )
        emit(ctx, polynomials.lagrange_interpolate(data), as_json)


@app.command("fromroots")
def fromroots_command(
    ctx: typer.Context,
    roots: str = typer.Argument(..., help="Rational roots, e.g. '1 -2 1/2'."),
    as_json: bool = json_option(),
) -> None:
    """The monic polynomial with the given roots."""
    with handle_errors():
        emit(ctx, polynomials.poly_from_roots(parse_vector(roots)), as_json)


@app.command("rs-encode")
def rs_encode_command(
    ctx: typer.Context,
    data: str = typer.Argument(..., help="Data values, e.g. '1.2 -3.2 -5.4 -1.1'."),
    as_json: bool = json_option(),
) -> None:
    """Append k redundancy values to k data values."""
    with handle_errors():
        cw = reed_solomon.rs_encode(parse_vector(read_text_arg(data)))
        emit(ctx, list(cw.values), as_json, text=" ".join(map(str, cw.values)))


@app.command("rs-verify")
def rs_verify_command(
    ctx: typer.Context,
    codeword: str = typer.Argument(..., help=CODEWORD_HELP),
    show_interpolant: bool = typer.Option(
        False, "--interpolant", help="Also print the interpolant of all points."
    ),
    as_json: bool = json_option(),
) -> None:
    """True when the received values lie on a polynomial of degree < k."""
    with handle_errors():
        cw = _codeword(codeword)
        valid = reed_solomon.rs_verify(cw)
        if not show_interpolant:
            emit(ctx, valid, as_json)
            return
        emit(
            ctx,
            {"valid": valid, "interpolant": reed_solomon.rs_interpolant(cw)},
            as_json,
        )


@app.command("rs-decode")
def rs_decode_command(
    ctx: typer.Context,
    codeword: str = typer.Argument(..., help=CODEWORD_HELP),
    as_json: bool = json_option(),
) -> None:
    """Data values of an intact codeword; none when the degree test fails."""
    with handle_errors():
        data = reed_solomon.rs_decode(_codeword(codeword))
        text = "none" if data is None else " ".join(map(str, data))
        emit(ctx, data, as_json, text=text)


@app.command("rs-correct")
def rs_correct_command(
    ctx: typer.Context,
    codeword: str = typer.Argument(..., help=CODEWORD_HELP),
    max_errors: int = typer.Option(
        1, "--max-errors", "-t", help="Largest number of positions to repair."
    ),
    as_json: bool = json_option(),
) -> None:
    """Repair up to T corrupted values by omitting positions."""
    with handle_errors():
        emit(ctx, reed_solomon.rs_correct(_codeword(codeword), max_errors), as_json)


__all__ = ["app"]

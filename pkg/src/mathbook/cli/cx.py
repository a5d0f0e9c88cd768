"""`mathbook cx`: complex numbers, phasors and series RLC circuits."""

import math
from typing import Any

import typer

from mathbook.cli._common import emit, handle_errors, json_option
from mathbook.domain import complexnum
from mathbook.domain.complexnum import Polar
from mathbook.domain.errors import InvalidCircuitError
from mathbook.domain.literals import parse_complex, parse_phasor

app = typer.Typer(help="Complex numbers and phasors.", no_args_is_help=True)

COMPLEX_HELP = "Binomial form, e.g. '2-2i' or '3+4j'."
PHASOR_HELP = "Phasor 'M@ANGLE' (radians), 'M@ANGLEdeg', 'M∠DEG', or 'a+bi'."


def _deg_option() -> Any:
    return typer.Option(False, "--deg", help="Read bare M@ANGLE angles in degrees.")


def _polar(text: str, *, degrees: bool) -> Polar:
    if "@" in text or "∠" in text:
        return parse_phasor(text, degrees=degrees)
    return complexnum.to_polar(parse_complex(text))


@app.command("mul")
def mul_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=COMPLEX_HELP),
    w: str = typer.Argument(..., help=COMPLEX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Exact product."""
    with handle_errors():
        emit(ctx, complexnum.c_mul(parse_complex(z), parse_complex(w)), as_json)


@app.command("div")
def div_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=COMPLEX_HELP),
    w: str = typer.Argument(..., help=COMPLEX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Exact quotient Z / W."""
    with handle_errors():
        emit(ctx, complexnum.c_div(parse_complex(z), parse_complex(w)), as_json)


@app.command("conj")
def conj_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=COMPLEX_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, complexnum.c_conj(parse_complex(z)), as_json)


@app.command("inv")
def inv_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=COMPLEX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Exact reciprocal 1 / Z."""
    with handle_errors():
        emit(ctx, complexnum.c_inv(parse_complex(z)), as_json)


@app.command("polar")
def polar_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=COMPLEX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Modulus and principal argument."""
    with handle_errors():
        emit(ctx, complexnum.to_polar(parse_complex(z)), as_json)


@app.command("rect")
def rect_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=PHASOR_HELP),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    """Binomial form of a phasor."""
    with handle_errors():
        emit(ctx, complexnum.to_rect(_polar(p, degrees=deg)), as_json)


@app.command("pow")
def pow_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=PHASOR_HELP),
    n: int = typer.Argument(..., help="Integer exponent."),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    """Z^N by De Moivre's formula."""
    with handle_errors():
        emit(ctx, complexnum.de_moivre_pow(_polar(z, degrees=deg), n), as_json)


@app.command("roots")
def roots_command(
    ctx: typer.Context,
    z: str = typer.Argument(..., help=PHASOR_HELP),
    n: int = typer.Argument(..., help="Root order, n >= 1."),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    """The N distinct N-th roots, k = 0 .. N-1."""
    with handle_errors():
        emit(ctx, complexnum.nth_roots(_polar(z, degrees=deg), n), as_json)


@app.command("phasor-sum")
def phasor_sum_command(
    ctx: typer.Context,
    phasors: list[str] = typer.Argument(..., help=PHASOR_HELP),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    """Sum of phasors, e.g. '10∠60' '5∠45'."""
    with handle_errors():
        terms = [_polar(p, degrees=deg) for p in phasors]
        emit(ctx, complexnum.phasor_sum(terms), as_json)


@app.command("phasor-mul")
def phasor_mul_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=PHASOR_HELP),
    q: str = typer.Argument(..., help=PHASOR_HELP),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(
            ctx,
            complexnum.phasor_mul(_polar(p, degrees=deg), _polar(q, degrees=deg)),
            as_json,
        )


@app.command("phasor-div")
def phasor_div_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help=PHASOR_HELP),
    q: str = typer.Argument(..., help=PHASOR_HELP),
    deg: bool = _deg_option(),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(
            ctx,
            complexnum.phasor_div(_polar(p, degrees=deg), _polar(q, degrees=deg)),
            as_json,
        )


@app.command("rlc")
def rlc_command(
    ctx: typer.Context,
    r: float = typer.Option(..., "--r", help="Resistance (ohm)."),
    l: float = typer.Option(..., "--l", help="Inductance (H)."),  # noqa: E741
    c: float | None = typer.Option(None, "--c", help="Capacitance (F); omit if none."),
    w: float | None = typer.Option(None, "--w", help="Angular frequency (rad/s)."),
    hz: float | None = typer.Option(None, "--hz", help="Frequency (Hz)."),
    i0: float | None = typer.Option(None, "--i0", help="Current amplitude (A)."),
    v0: float | None = typer.Option(None, "--v0", help="Source amplitude (V)."),
    as_json: bool = json_option(),
) -> None:
    """Series RLC: source and element voltages from I0, or I0 from V0."""
    with handle_errors():
        if (w is None) == (hz is None):
            raise InvalidCircuitError("give exactly one of --w or --hz")
        if (i0 is None) == (v0 is None):
            raise InvalidCircuitError("give exactly one of --i0 or --v0")
        omega = w if w is not None else math.tau * (hz or 0.0)
        if v0 is not None:
            emit(ctx, complexnum.series_rlc_current(v0, omega, r, l, c), as_json)
            return
        spec = complexnum.circuit_spec(i0 or 0.0, omega, r, l, c)
        emit(
            ctx,
            {
                "source": complexnum.series_rlc_source(spec),
                "voltages": complexnum.element_voltages(spec),
            },
            as_json,
        )


__all__ = ["app"]

"""`mathbook nav|geo|phys`: worked applications of trigonometry and logarithms."""

import typer

from mathbook.cli._common import emit, handle_errors, json_option
from mathbook.domain import applied, conics, fitting
from mathbook.domain.literals import parse_scalar

nav_app = typer.Typer(help="Air navigation.", no_args_is_help=True)
geo_app = typer.Typer(help="Triangles, angles and conics.", no_args_is_help=True)
phys_app = typer.Typer(
    help="Projectiles, earthquakes and astronomy.", no_args_is_help=True
)


@nav_app.command("wind")
def wind_command(
    ctx: typer.Context,
    course: float = typer.Option(..., "--course", help="True course (deg)."),
    tas: float = typer.Option(..., "--tas", help="True airspeed (kt)."),
    wind_from: float = typer.Option(
        ..., "--wind-from", help="Direction the wind blows from (deg)."
    ),
    wind_speed: float = typer.Option(..., "--wind-speed", help="Wind speed (kt)."),
    as_json: bool = json_option(),
) -> None:
    """Heading, drift angle and ground speed for a wind triangle.

    The drift is heading minus course: negative when the nose points left of
    the course, positive when it points right.
    """
    with handle_errors():
        emit(ctx, applied.wind_triangle(course, tas, wind_from, wind_speed), as_json)


@geo_app.command("conic")
def conic_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help="Coefficient of x^2."),
    c: str = typer.Argument(..., help="Coefficient of y^2."),
    d: str = typer.Argument(..., help="Coefficient of x."),
    e: str = typer.Argument(..., help="Coefficient of y."),
    f: str = typer.Argument(..., help="Constant term."),
    as_json: bool = json_option(),
) -> None:
    """Classify A x^2 + C y^2 + D x + E y + F = 0 and give its canonical form.

    Pass negative coefficients after `--`.
    """
    with handle_errors():
        coefficients = [parse_scalar(v) for v in (a, c, d, e, f)]
        emit(ctx, conics.conic_canonical(*coefficients), as_json)


@geo_app.command("chimney")
def chimney_command(
    ctx: typer.Context,
    radius: float = typer.Argument(..., help="Chimney radius."),
    pitch: float = typer.Argument(..., help="Roof pitch (deg), in [0, 90)."),
    as_json: bool = json_option(),
) -> None:
    """Ellipse cut on a round chimney by a pitched roof, for the gardener's method."""
    with handle_errors():
        emit(ctx, applied.cylinder_ellipse(radius, pitch), as_json)


@geo_app.command("cosines")
def cosines_command(
    ctx: typer.Context,
    b: float = typer.Argument(..., help="First enclosing side."),
    c: float = typer.Argument(..., help="Second enclosing side."),
    alpha: float = typer.Argument(..., help="Enclosed angle (deg)."),
    as_json: bool = json_option(),
) -> None:
    """Side opposite ALPHA by the law of cosines."""
    with handle_errors():
        emit(ctx, applied.law_of_cosines(b, c, alpha), as_json)


@geo_app.command("sines")
def sines_command(
    ctx: typer.Context,
    a: float = typer.Argument(..., help="Side opposite ALPHA."),
    alpha: float = typer.Argument(..., help="Angle opposite A (deg)."),
    beta: float = typer.Argument(..., help="Angle opposite the wanted side (deg)."),
    as_json: bool = json_option(),
) -> None:
    """Side opposite BETA by the law of sines."""
    with handle_errors():
        emit(ctx, applied.law_of_sines(a, alpha, beta), as_json)


@geo_app.command("deg2rad")
def deg2rad_command(
    ctx: typer.Context,
    degrees: float = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, applied.deg_to_rad(degrees), as_json)


@geo_app.command("rad2deg")
def rad2deg_command(
    ctx: typer.Context,
    radians: float = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, applied.rad_to_deg(radians), as_json)


@phys_app.command("projectile")
def projectile_command(
    ctx: typer.Context,
    v0: float = typer.Argument(..., help="Launch speed (m/s)."),
    alpha: float = typer.Argument(..., help="Launch angle (deg), in (0, 90)."),
    g: float = typer.Option(applied.EARTH_GRAVITY, "--g", help="Gravity (m/s^2)."),
    as_json: bool = json_option(),
) -> None:
    """Horizontal distance and flight time of a launch over flat ground."""
    with handle_errors():
        emit(ctx, applied.projectile(v0, alpha, g), as_json)


@phys_app.command("position")
def position_command(
    ctx: typer.Context,
    v0: float = typer.Argument(..., help="Launch speed (m/s)."),
    alpha: float = typer.Argument(..., help="Launch angle (deg), in (0, 90)."),
    t: float = typer.Argument(..., help="Time since launch (s)."),
    g: float = typer.Option(applied.EARTH_GRAVITY, "--g", help="Gravity (m/s^2)."),
    as_json: bool = json_option(),
) -> None:
    """Position (x, y) of the projectile at time T."""
    with handle_errors():
        x, y = applied.projectile_position(v0, alpha, t, g)
        emit(ctx, {"x": x, "y": y}, as_json)


@phys_app.command("richter")
def richter_command(
    ctx: typer.Context,
    m1: float = typer.Argument(..., help="Stronger magnitude."),
    m2: float = typer.Argument(..., help="Weaker magnitude."),
    as_json: bool = json_option(),
) -> None:
    """How many times larger the amplitude of M1 is than that of M2."""
    with handle_errors():
        emit(ctx, applied.richter_ratio(m1, m2), as_json)


@phys_app.command("magnitude")
def magnitude_command(
    ctx: typer.Context,
    amplitude: float = typer.Argument(..., help="Measured amplitude A."),
    reference: float = typer.Argument(..., help="Reference amplitude A0."),
    as_json: bool = json_option(),
) -> None:
    """Local magnitude log10(A / A0)."""
    with handle_errors():
        emit(ctx, applied.richter_magnitude(amplitude, reference), as_json)


@phys_app.command("aristarchus")
def aristarchus_command(
    ctx: typer.Context,
    half_days: float = typer.Argument(
        ..., help="Days from first-quarter to last-quarter half moon."
    ),
    cycle_days: float = typer.Argument(..., help="Days of a full lunar cycle."),
    whole_degrees: bool = typer.Option(
        True,
        "--whole-degrees/--exact-angle",
        help="Round the half-moon angle to whole degrees before taking the ratio.",
    ),
    as_json: bool = json_option(),
) -> None:
    """Ratio of the Sun's distance to the Moon's from the timing of half moons."""
    with handle_errors():
        emit(
            ctx,
            applied.aristarchus_ratio(
                half_days, cycle_days, whole_degrees=whole_degrees
            ),
            as_json,
        )


@phys_app.command("friction")
def friction_command(
    ctx: typer.Context,
    a: float = typer.Argument(..., help="Quadratic braking coefficient a (s^2/m)."),
    g: float = typer.Option(fitting.STANDARD_GRAVITY, "--g", help="Gravity (m/s^2)."),
    as_json: bool = json_option(),
) -> None:
    """Road friction coefficient from a braking fit, a = 1 / (2 mu g)."""
    with handle_errors():
        emit(ctx, fitting.friction_coefficient(a, g), as_json)


__all__ = ["geo_app", "nav_app", "phys_app"]

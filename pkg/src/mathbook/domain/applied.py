"""Worked applications: angles, projectiles, triangles, navigation and astronomy.

Angles are taken in degrees at this boundary and converted internally.
"""

import math
from typing import NamedTuple

from mathbook.domain.errors import (
    NonPositiveError,
    OutOfRangeError,
    WindExceedsTasError,
)

EARTH_GRAVITY = 9.80
ARISTARCHUS_LIMIT = 1e6
FULL_TURN_DEG = 360.0


class ProjectileFlight(NamedTuple):
    distance: float
    flight_time: float


class WindSolution(NamedTuple):
    """Ground speed in knots; drift is ``heading - course`` in degrees."""

    ground_speed: float
    drift_angle: float
    heading: float


class ChimneyEllipse(NamedTuple):
    """Cut of a tube of radius ``R`` by a roof pitched at ``alpha``."""

    semi_major: float
    focal: float
    string_length: float


def deg_to_rad(degrees: float) -> float:
    return degrees * math.pi / 180


def rad_to_deg(radians: float) -> float:
    return radians * 180 / math.pi


def sin_deg(degrees: float) -> float:
    return math.sin(deg_to_rad(degrees))


def cos_deg(degrees: float) -> float:
    return math.cos(deg_to_rad(degrees))


def _check_launch(v0: float, alpha: float, g: float) -> None:
    if v0 <= 0:
        raise OutOfRangeError(f"launch speed must be positive, got {v0}")
    if not 0 < alpha < 90:
        raise OutOfRangeError(f"launch angle must be in (0, 90) degrees, got {alpha}")
    if g <= 0:
        raise OutOfRangeError(f"gravity must be positive, got {g}")


def projectile(v0: float, alpha: float, g: float = EARTH_GRAVITY) -> ProjectileFlight:
    """Range ``v0^2 sin(2 alpha) / g`` and flight time ``2 v0 sin(alpha) / g``."""
    _check_launch(v0, alpha, g)
    return ProjectileFlight(
        v0**2 * sin_deg(2 * alpha) / g,
        2 * v0 * sin_deg(alpha) / g,
    )


def projectile_position(
    v0: float, alpha: float, t: float, g: float = EARTH_GRAVITY
) -> tuple[float, float]:
    """``(x, y)`` at time ``t`` for a launch from the origin."""
    _check_launch(v0, alpha, g)
    if t < 0:
        raise OutOfRangeError(f"time must be non-negative, got {t}")
    return v0 * cos_deg(alpha) * t, v0 * sin_deg(alpha) * t - g * t * t / 2


def law_of_cosines(b: float, c: float, alpha_deg: float) -> float:
    """Side opposite ``alpha`` from the two enclosing sides."""
    if b < 0 or c < 0:
        raise OutOfRangeError("sides must be non-negative")
    return math.sqrt(max(0.0, b * b + c * c - 2 * b * c * cos_deg(alpha_deg)))


def law_of_sines(a: float, alpha_deg: float, beta_deg: float) -> float:
    """Side opposite ``beta`` given side ``a`` opposite ``alpha``."""
    sin_alpha = sin_deg(alpha_deg)
    if a < 0 or math.isclose(sin_alpha, 0.0, abs_tol=1e-15):
        raise OutOfRangeError("need a non-negative side and a non-degenerate angle")
    return a * sin_deg(beta_deg) / sin_alpha


def wind_triangle(
    true_course: float, tas: float, wind_from: float, wind_speed: float
) -> WindSolution:
    """Heading and ground speed that keep the aircraft on ``true_course``.

    ``wind_from`` is the direction the wind blows from. The crosswind component
    is cancelled by turning the nose into the wind; what is left of the true
    airspeed along the course plus the along-course wind is the ground speed.
    """
    if wind_speed < 0:
        raise OutOfRangeError(f"wind speed must be non-negative, got {wind_speed}")
    if tas <= wind_speed:
        raise WindExceedsTasError(f"wind {wind_speed} kt is not below TAS {tas} kt")
    wind_to = wind_from + 180
    along = wind_speed * cos_deg(wind_to - true_course)
    cross = wind_speed * sin_deg(wind_to - true_course)
    drift = rad_to_deg(math.asin(-cross / tas))
    ground_speed = tas * cos_deg(drift) + along
    heading = (true_course + drift) % FULL_TURN_DEG
    return WindSolution(ground_speed, drift, heading)


def aristarchus_ratio(
    half_to_half_days: float, cycle_days: float, *, whole_degrees: bool = False
) -> float:
    """Sun-to-Moon distance ratio from the time between half moons.

    With uniform lunar motion the Moon sweeps ``psi = pi * half / cycle`` from
    first quarter to last; the Sun-Earth-Moon angle at half moon is
    ``phi = pi/2 - psi`` and the ratio is ``1 / sin(phi)``. ``whole_degrees``
    rounds ``phi`` to whole degrees first.
    """
    if not 0 < half_to_half_days < cycle_days:
        raise OutOfRangeError("need 0 < half-to-half days < cycle days")
    phi = math.pi / 2 - math.pi * half_to_half_days / cycle_days
    if whole_degrees:
        phi = deg_to_rad(round(rad_to_deg(phi)))
    if phi <= 0 or 1 / math.sin(phi) > ARISTARCHUS_LIMIT:
        raise OutOfRangeError("the half moons are too far apart for a finite ratio")
    return 1 / math.sin(phi)


def richter_ratio(m1: float, m2: float) -> float:
    """Amplitude ratio of two local magnitudes, ``10^(m1 - m2)``."""
    return 10 ** (m1 - m2)


def richter_magnitude(amplitude: float, reference: float) -> float:
    """Local magnitude ``log10(A / A0)``."""
    if amplitude <= 0 or reference <= 0:
        raise NonPositiveError("amplitudes must be positive")
    return math.log10(amplitude / reference)


def cylinder_ellipse(radius: float, alpha_deg: float) -> ChimneyEllipse:
    """Ellipse cut on a round chimney by a roof of pitch ``alpha``."""
    if radius <= 0:
        raise OutOfRangeError(f"radius must be positive, got {radius}")
    if not 0 <= alpha_deg < 90:
        raise OutOfRangeError(f"roof pitch must be in [0, 90) degrees, got {alpha_deg}")
    stretch = math.sqrt(1 + sin_deg(alpha_deg) ** 2)
    return ChimneyEllipse(
        radius * stretch, radius * sin_deg(alpha_deg), 2 * radius * stretch
    )


__all__ = [
    "ChimneyEllipse",
    "ProjectileFlight",
    "WindSolution",
    "aristarchus_ratio",
    "cos_deg",
    "cylinder_ellipse",
    "deg_to_rad",
    "law_of_cosines",
    "law_of_sines",
    "projectile",
    "projectile_position",
    "rad_to_deg",
    "richter_magnitude",
    "richter_ratio",
    "sin_deg",
    "wind_triangle",
]

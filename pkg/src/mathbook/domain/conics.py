"""Exact classification of unrotated conics ``A x^2 + C y^2 + D x + E y + F = 0``.

Central conics are written ``(x - x0)^2 / a_sq + (y - y0)^2 / b_sq = rhs`` with
signed denominators and ``rhs`` 1 (or 0 when degenerate). Parabolas are written
``y - y0 = a (x - x0)^2`` or ``x - x0 = a (y - y0)^2``. The input equation is
``scale`` times the expansion of that canonical form.
"""

import math
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Literal

from mathbook.domain.errors import NotAConicError
from mathbook.domain.polynomials import Coefficient, as_fraction, complete_square

type Orientation = Literal["vertical", "horizontal"]
type Coefficients = tuple[Fraction, Fraction, Fraction, Fraction, Fraction]


class ConicKind(StrEnum):
    CIRCLE = "Circle"
    ELLIPSE = "Ellipse"
    HYPERBOLA_H = "HyperbolaH"
    HYPERBOLA_V = "HyperbolaV"
    PARABOLA = "Parabola"
    DEGENERATE_POINT = "DegeneratePoint"
    DEGENERATE_LINES = "DegenerateLines"
    EMPTY = "Empty"


@dataclass(frozen=True)
class ConicCanonical:
    """Canonical parameters; ``center`` is the vertex for parabolas.

    ``center`` is None for equations in a single variable, which describe
    parallel lines or nothing and have no two-dimensional canonical form.
    """

    kind: ConicKind
    center: tuple[Fraction, Fraction] | None
    scale: Fraction
    a_sq: Fraction | None = None
    b_sq: Fraction | None = None
    rhs: int = 1
    leading: Fraction | None = None
    orientation: Orientation | None = None
    focal_sq: Fraction | None = None
    eccentricity: float | None = None
    foci: tuple[tuple[float, float], ...] = ()

    @property
    def semi_axes(self) -> tuple[float, float] | None:
        if self.a_sq is None or self.b_sq is None:
            return None
        return math.sqrt(abs(self.a_sq)), math.sqrt(abs(self.b_sq))


def _central(
    a: Fraction, c: Fraction, d: Fraction, e: Fraction, f: Fraction
) -> ConicCanonical:
    x0, y0 = -d / (2 * a), -e / (2 * c)
    k = d * d / (4 * a) + e * e / (4 * c) - f
    center = (x0, y0)
    if k == 0:
        kind = ConicKind.DEGENERATE_POINT if a * c > 0 else ConicKind.DEGENERATE_LINES
        foci = ((float(x0), float(y0)),) if kind is ConicKind.DEGENERATE_POINT else ()
        return ConicCanonical(kind, center, a, Fraction(1), a / c, rhs=0, foci=foci)
    a_sq, b_sq = k / a, k / c
    if a_sq < 0 and b_sq < 0:
        return ConicCanonical(ConicKind.EMPTY, center, k, a_sq, b_sq)
    if a_sq > 0 and b_sq > 0:
        return _ellipse(center, k, a_sq, b_sq)
    return _hyperbola(center, k, a_sq, b_sq)


def _ellipse(
    center: tuple[Fraction, Fraction], k: Fraction, a_sq: Fraction, b_sq: Fraction
) -> ConicCanonical:
    x0, y0 = float(center[0]), float(center[1])
    if a_sq == b_sq:
        return ConicCanonical(
            ConicKind.CIRCLE,
            center,
            k,
            a_sq,
            b_sq,
            focal_sq=Fraction(0),
            eccentricity=0.0,
            foci=((x0, y0),),
        )
    major = max(a_sq, b_sq)
    focal_sq = abs(a_sq - b_sq)
    focal = math.sqrt(focal_sq)
    foci = (
        ((x0 - focal, y0), (x0 + focal, y0))
        if a_sq > b_sq
        else ((x0, y0 - focal), (x0, y0 + focal))
    )
    return ConicCanonical(
        ConicKind.ELLIPSE,
        center,
        k,
        a_sq,
        b_sq,
        focal_sq=focal_sq,
        eccentricity=math.sqrt(focal_sq / major),
        foci=foci,
    )


def _hyperbola(
    center: tuple[Fraction, Fraction], k: Fraction, a_sq: Fraction, b_sq: Fraction
) -> ConicCanonical:
    x0, y0 = float(center[0]), float(center[1])
    focal_sq = abs(a_sq) + abs(b_sq)
    focal = math.sqrt(focal_sq)
    if a_sq > 0:
        kind = ConicKind.HYPERBOLA_H
        transverse = a_sq
        foci = ((x0 - focal, y0), (x0 + focal, y0))
    else:
        kind = ConicKind.HYPERBOLA_V
        transverse = b_sq
        foci = ((x0, y0 - focal), (x0, y0 + focal))
    return ConicCanonical(
        kind,
        center,
        k,
        a_sq,
        b_sq,
        focal_sq=focal_sq,
        eccentricity=math.sqrt(focal_sq / transverse),
        foci=foci,
    )


def _parabola(
    square: Fraction,
    linear_sq: Fraction,
    linear_other: Fraction,
    f: Fraction,
    orientation: Orientation,
) -> ConicCanonical:
    # other = a' s^2 + b' s + c' where s is the squared variable
    vertex = complete_square(
        -square / linear_other, -linear_sq / linear_other, -f / linear_other
    )
    s0, other0 = vertex.vertex
    focus_offset = 1 / (4 * vertex.a)
    if orientation == "vertical":
        center = (s0, other0)
        focus = (float(s0), float(other0 + focus_offset))
    else:
        center = (other0, s0)
        focus = (float(other0 + focus_offset), float(s0))
    return ConicCanonical(
        ConicKind.PARABOLA,
        center,
        -linear_other,
        leading=vertex.a,
        orientation=orientation,
        eccentricity=1.0,
        foci=(focus,),
    )


def _single_variable(square: Fraction, linear: Fraction, f: Fraction) -> ConicCanonical:
    disc = linear * linear - 4 * square * f
    kind = ConicKind.EMPTY if disc < 0 else ConicKind.DEGENERATE_LINES
    return ConicCanonical(kind, None, square)


def conic_canonical(
    a: Coefficient, c: Coefficient, d: Coefficient, e: Coefficient, f: Coefficient
) -> ConicCanonical:
    """Classify ``A x^2 + C y^2 + D x + E y + F = 0`` by completing squares."""
    fa, fc, fd, fe, ff = (as_fraction(v) for v in (a, c, d, e, f))
    if fa == fc == fd == fe == 0:
        raise NotAConicError("A, C, D and E are all zero")
    if fa != 0 and fc != 0:
        return _central(fa, fc, fd, fe, ff)
    if fa != 0:
        if fe == 0:
            return _single_variable(fa, fd, ff)
        return _parabola(fa, fd, fe, ff, "vertical")
    if fc != 0:
        if fd == 0:
            return _single_variable(fc, fe, ff)
        return _parabola(fc, fe, fd, ff, "horizontal")
    return ConicCanonical(ConicKind.DEGENERATE_LINES, None, Fraction(1))


def conic_expand(canonical: ConicCanonical) -> Coefficients:
    """``(A, C, D, E, F)`` of ``scale`` times the expanded canonical equation."""
    lam = canonical.scale
    if canonical.center is None:
        raise NotAConicError(f"{canonical.kind} has no two-dimensional canonical form")
    x0, y0 = canonical.center
    if canonical.a_sq is not None and canonical.b_sq is not None:
        ia, ib = 1 / canonical.a_sq, 1 / canonical.b_sq
        return (
            lam * ia,
            lam * ib,
            lam * -2 * x0 * ia,
            lam * -2 * y0 * ib,
            lam * (x0 * x0 * ia + y0 * y0 * ib - canonical.rhs),
        )
    if canonical.leading is None:
        raise NotAConicError(f"{canonical.kind} has no canonical parameters")
    p = canonical.leading
    zero = Fraction(0)
    if canonical.orientation == "vertical":
        return (lam * p, zero, lam * -2 * p * x0, -lam, lam * (p * x0 * x0 + y0))
    return (zero, lam * p, -lam, lam * -2 * p * y0, lam * (p * y0 * y0 + x0))


__all__ = [
    "ConicCanonical",
    "ConicKind",
    "conic_canonical",
    "conic_expand",
]

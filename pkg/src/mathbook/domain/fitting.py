"""Least-squares polynomial fitting over floats (numpy normal equations)."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from mathbook.domain.errors import (
    InsufficientPointsError,
    InvalidInputError,
    NonPositiveError,
    SingularNormalEquationsError,
)

STANDARD_GRAVITY = 9.81

type Point = tuple[float | Fraction | int, float | Fraction | int]


@dataclass(frozen=True)
class FitResult:
    """Coefficients in ascending power (constant first) and the squared-error sum."""

    coefficients: tuple[float, ...]
    sse: float


def _arrays(points: Sequence[Point]) -> tuple[np.ndarray, np.ndarray]:
    xs = np.array([float(x) for x, _ in points], dtype=np.float64)
    ys = np.array([float(y) for _, y in points], dtype=np.float64)
    return xs, ys


def _design_matrix(xs: np.ndarray, powers: range) -> np.ndarray:
    return np.column_stack([xs**p for p in powers])


def fit_poly(
    points: Sequence[Point], degree: int, *, through_origin: bool = False
) -> FitResult:
    """Least-squares polynomial of the given degree.

    With ``through_origin`` the constant term is pinned to zero and only the
    powers ``1..degree`` are fitted; its coefficient is reported as 0.
    """
    if degree < 0 or (through_origin and degree < 1):
        raise InvalidInputError(f"unsupported degree {degree} for this fit")
    xs, ys = _arrays(points)
    unknowns = degree if through_origin else degree + 1
    if len(set(xs.tolist())) < unknowns:
        raise InsufficientPointsError(
            f"need {unknowns} distinct abscissas for degree {degree}, "
            f"got {len(set(xs.tolist()))}"
        )
    powers = range(1, degree + 1) if through_origin else range(degree + 1)
    design = _design_matrix(xs, powers)
    try:
        beta = np.linalg.solve(design.T @ design, design.T @ ys)
    except np.linalg.LinAlgError as exc:
        raise SingularNormalEquationsError(str(exc)) from exc
    residual = ys - design @ beta
    coefficients = ([0.0] if through_origin else []) + [float(b) for b in beta]
    return FitResult(tuple(coefficients), float(residual @ residual))


def fit_ratio_model(points: Sequence[Point]) -> FitResult:
    """Fit ``d / v = a v + b`` as a straight line through ``(v, d / v)``.

    Returns coefficients ``(b, a)``; the error sum is measured on ``d / v``.
    """
    if any(float(v) == 0 for v, _ in points):
        raise InvalidInputError("the ratio model needs non-zero abscissas")
    ratios = [(v, float(d) / float(v)) for v, d in points]
    return fit_poly(ratios, 1)


def fit_prediction(fit: FitResult, x: float) -> float:
    """Evaluate the fitted polynomial at ``x``."""
    return float(np.polynomial.polynomial.polyval(x, fit.coefficients))


def fit_sse(fit: FitResult, points: Sequence[Point]) -> float:
    """Recompute the squared-error sum of ``fit`` on ``points``."""
    xs, ys = _arrays(points)
    residual = ys - np.polynomial.polynomial.polyval(xs, fit.coefficients)
    return float(residual @ residual)


def friction_coefficient(a: float, g: float = STANDARD_GRAVITY) -> float:
    """Friction coefficient from the braking slope, ``a = 1 / (2 mu g)``."""
    if a <= 0:
        raise NonPositiveError(f"braking coefficient must be positive, got {a}")
    return 1 / (2 * a * g)


__all__ = [
    "STANDARD_GRAVITY",
    "FitResult",
    "Point",
    "fit_poly",
    "fit_prediction",
    "fit_ratio_model",
    "fit_sse",
    "friction_coefficient",
]

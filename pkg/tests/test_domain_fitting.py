"""Tests for least-squares fits."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mathbook.domain.errors import InsufficientPointsError, NonPositiveError
from mathbook.domain.fitting import (
    fit_poly,
    fit_prediction,
    fit_ratio_model,
    fit_sse,
    friction_coefficient,
)

BRAKING_POINTS = [
    (Fraction(125, 9), 35),
    (Fraction(275, 18), 40),
    (Fraction(50, 3), 45),
    (Fraction(325, 18), 50),
    (Fraction(175, 9), 55),
    (Fraction(125, 6), 65),
    (Fraction(200, 9), 70),
]


def test_exact_line_has_zero_error() -> None:
    fit = fit_poly([(0, 1), (1, 3), (2, 5)], 1)
    assert fit.coefficients == pytest.approx((1.0, 2.0))
    assert fit.sse == pytest.approx(0.0, abs=1e-12)
    assert fit_prediction(fit, 10) == pytest.approx(21.0)


def test_quadratic_through_three_points() -> None:
    fit = fit_poly([(-1, 1), (0, 0), (1, 1)], 2)
    assert fit.coefficients == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)


def test_braking_slope_through_origin() -> None:
    fit = fit_poly(BRAKING_POINTS, 1, through_origin=True)
    assert fit.coefficients[0] == 0.0
    assert fit.coefficients[1] == pytest.approx(2.88059, abs=1e-4)
    assert fit_sse(fit, BRAKING_POINTS) == pytest.approx(fit.sse)


def test_ratio_model_and_friction() -> None:
    b, a = fit_ratio_model(BRAKING_POINTS).coefficients
    assert a == pytest.approx(0.0777139, abs=1e-5)
    assert b == pytest.approx(1.41197, abs=1e-3)
    assert friction_coefficient(a) == pytest.approx(0.655, abs=0.003)


def test_fit_needs_enough_distinct_abscissas() -> None:
    with pytest.raises(InsufficientPointsError):
        fit_poly([(1, 1), (1, 2)], 1)


def test_friction_requires_positive_slope() -> None:
    with pytest.raises(NonPositiveError):
        friction_coefficient(0.0)


def test_residuals_are_orthogonal_to_the_fitted_powers() -> None:
    rng = random.Random(13)
    for _ in range(50):
        degree = rng.randint(0, 3)
        xs = rng.sample(range(-30, 31), rng.randint(degree + 2, 12))
        points = [(x / 10, rng.uniform(-10, 10)) for x in xs]
        fit = fit_poly(points, degree)
        residuals = [y - fit_prediction(fit, x) for x, y in points]
        for power in range(degree + 1):
            moment = sum(
                x**power * r for (x, _), r in zip(points, residuals, strict=True)
            )
            assert moment == pytest.approx(0, abs=1e-6)
        assert fit_sse(fit, points) == pytest.approx(fit.sse, rel=1e-9, abs=1e-9)

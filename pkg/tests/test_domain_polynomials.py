"""Tests for exact polynomial arithmetic."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from mathbook.domain.errors import (
    BothZeroError,
    DivisionByZeroPolynomialError,
    DuplicateAbscissaError,
    NotQuadraticError,
)
from mathbook.domain.literals import parse_polynomial
from mathbook.domain.polynomials import (
    ZERO,
    Polynomial,
    VertexForm,
    as_fraction,
    complete_square,
    format_poly,
    lagrange_interpolate,
    poly_add,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_from_roots,
    poly_gcd,
    poly_lcm,
    poly_mul,
    poly_sub,
    polynomial,
    quadratic_roots,
)


def test_trailing_zeros_are_stripped() -> None:
    p = polynomial([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert polynomial([0]).degree == -1
    assert polynomial([0]) == ZERO


def test_add_sub_mul() -> None:
    p = polynomial([1, 1])
    q = polynomial([-1, 1])
    assert poly_add(p, q) == polynomial([0, 2])
    assert poly_sub(p, p) == ZERO
    assert poly_mul(p, q) == polynomial([-1, 0, 1])


def test_long_division_worked_example() -> None:
    quotient, remainder = poly_divmod(polynomial([6, 0, -1, 5]), polynomial([-4, 1]))
    assert quotient == polynomial([76, 19, 5])
    assert remainder == polynomial([310])


def test_division_recomposes() -> None:
    num = parse_polynomial("3*x^5 - 2*x^3 + x - 7")
    den = parse_polynomial("2*x^2 + 1")
    quotient, remainder = poly_divmod(num, den)
    assert poly_add(poly_mul(quotient, den), remainder) == num
    assert remainder.degree < den.degree
    with pytest.raises(DivisionByZeroPolynomialError):
        poly_divmod(num, ZERO)


def test_gcd_and_lcm_are_monic() -> None:
    p = poly_from_roots([1, 2])
    q = poly_from_roots([2, 3])
    assert poly_gcd(poly_mul(polynomial([3]), p), q) == polynomial([-2, 1])
    assert poly_lcm(p, q) == poly_from_roots([1, 2, 3])
    with pytest.raises(BothZeroError):
        poly_gcd(ZERO, ZERO)


def test_eval_and_derivative() -> None:
    p = parse_polynomial("x^3 + 6*x - 20")
    assert poly_eval(p, 2) == 0
    assert poly_eval(p, Fraction(1, 2)) == Fraction(1, 8) + 3 - 20
    assert poly_derivative(p) == polynomial([6, 0, 3])


def test_quadratic_roots() -> None:
    golden, conjugate = quadratic_roots(1, -1, -1)
    assert golden == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert conjugate == pytest.approx((1 - math.sqrt(5)) / 2, abs=1e-12)
    assert quadratic_roots(1, -3, 2) == (2, 1)
    assert quadratic_roots(1, 0, 1) == (1j, -1j)
    with pytest.raises(NotQuadraticError):
        quadratic_roots(0, 1, 1)


def test_complete_square() -> None:
    form = complete_square(1, -6, 2)
    assert form == VertexForm(Fraction(1), Fraction(3), Fraction(7))
    assert form.vertex == (3, -7)
    assert form.expand() == polynomial([2, -6, 1])


def test_lagrange_passes_through_points() -> None:
    points = [(0, 1), (1, 3), (2, 11), ("1.5", "6.25")]
    p = lagrange_interpolate(points)
    assert p.degree <= 3
    for x, y in points:
        assert poly_eval(p, Fraction(x)) == Fraction(y)
    with pytest.raises(DuplicateAbscissaError):
        lagrange_interpolate([(1, 1), (1, 2)])


def test_format_poly() -> None:
    assert format_poly(parse_polynomial("-20 6 0 1")) == "x^3 + 6*x - 20"
    assert format_poly(polynomial([Fraction(-1, 2), 0, -1])) == "-x^2 - 1/2"
    assert format_poly(Polynomial(())) == "0"


def test_floats_become_their_decimal_rationals() -> None:
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction(-5.4) == Fraction(-27, 5)
    assert as_fraction("7/4") == Fraction(7, 4)
    assert polynomial([0.1, 1.2]).coefficients == (Fraction(1, 10), Fraction(6, 5))
    assert complete_square(0.5, 1, 0).h == -1


def test_lagrange_passes_through_random_points() -> None:
    rng = random.Random(5)
    for _ in range(50):
        xs = rng.sample(range(-20, 21), rng.randint(1, 6))
        points = [(x, Fraction(rng.randint(-99, 99), rng.randint(1, 9))) for x in xs]
        p = lagrange_interpolate(points)
        assert p.degree <= len(points) - 1
        for x, y in points:
            assert poly_eval(p, Fraction(x)) == y


def test_complete_square_reexpands_random_quadratics() -> None:
    rng = random.Random(8)
    for _ in range(100):
        a = Fraction(rng.choice([n for n in range(-9, 10) if n]), rng.randint(1, 5))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        form = complete_square(a, b, c)
        assert form.expand() == polynomial([c, b, a])
        h, low = form.vertex
        assert poly_eval(polynomial([c, b, a]), h) == low

"""Dense polynomials over exact rationals.

Coefficients are stored lowest power first and normalized so the leading
coefficient is non-zero; the zero polynomial has no coefficients and degree -1.
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mathbook.domain.errors import (
    BothZeroError,
    DivisionByZeroPolynomialError,
    DuplicateAbscissaError,
    InsufficientPointsError,
    NotQuadraticError,
)

type Coefficient = Fraction | int | float | str
type Root = Fraction | float | complex
type Number = Fraction | int | float | complex

ZERO_DEGREE = -1


def as_fraction(value: Coefficient) -> Fraction:
    """Exact rational for ``value``; floats are read through their shortest repr."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class Polynomial:
    """``coefficients[i]`` multiplies ``x**i``."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [as_fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)


class VertexForm(NamedTuple):
    """Quadratic written ``a (x - h)^2 - k``; note the minus sign before ``k``."""

    a: Fraction
    h: Fraction
    k: Fraction

    @property
    def vertex(self) -> tuple[Fraction, Fraction]:
        return self.h, -self.k

    def expand(self) -> Polynomial:
        """``a x^2 - 2 a h x + (a h^2 - k)``."""
        return Polynomial((self.a * self.h**2 - self.k, -2 * self.a * self.h, self.a))


def polynomial(coefficients: Iterable[Coefficient]) -> Polynomial:
    """Build a polynomial from ascending coefficients."""
    return Polynomial(tuple(as_fraction(c) for c in coefficients))


ZERO = Polynomial(())
ONE = Polynomial((Fraction(1),))
X = Polynomial((Fraction(0), Fraction(1)))


def _pairwise(p: Polynomial, q: Polynomial) -> list[tuple[Fraction, Fraction]]:
    size = max(len(p.coefficients), len(q.coefficients))
    pad_p = p.coefficients + (Fraction(0),) * (size - len(p.coefficients))
    pad_q = q.coefficients + (Fraction(0),) * (size - len(q.coefficients))
    return list(zip(pad_p, pad_q, strict=True))


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(tuple(a + b for a, b in _pairwise(p, q)))


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(tuple(a - b for a, b in _pairwise(p, q)))


def poly_neg(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(-c for c in p.coefficients))


def poly_scale(c: Fraction | int, p: Polynomial) -> Polynomial:
    return Polynomial(tuple(c * a for a in p.coefficients))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero or q.is_zero:
        return ZERO
    out = [Fraction(0)] * (len(p.coefficients) + len(q.coefficients) - 1)
    for i, a in enumerate(p.coefficients):
        for j, b in enumerate(q.coefficients):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_divmod(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division: ``num = q * den + r`` with ``deg r < deg den``."""
    if den.is_zero:
        raise DivisionByZeroPolynomialError("cannot divide by the zero polynomial")
    remainder = list(num.coefficients)
    quotient = [Fraction(0)] * max(0, num.degree - den.degree + 1)
    lead = den.leading
    for shift in range(num.degree - den.degree, -1, -1):
        factor = remainder[shift + den.degree] / lead
        quotient[shift] = factor
        if factor:
            for i, c in enumerate(den.coefficients):
                remainder[shift + i] -= factor * c
    kept = remainder[: max(den.degree, 0)]
    return Polynomial(tuple(quotient)), Polynomial(tuple(kept))


def monic(p: Polynomial) -> Polynomial:
    if p.is_zero:
        return p
    return poly_scale(1 / p.leading, p)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by Euclid's algorithm."""
    if p.is_zero and q.is_zero:
        raise BothZeroError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return monic(a)


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic least common multiple, ``p q / gcd(p, q)``; zero if either is zero."""
    if p.is_zero or q.is_zero:
        return ZERO
    quotient, _ = poly_divmod(poly_mul(p, q), poly_gcd(p, q))
    return monic(quotient)


def poly_eval(p: Polynomial, x: Number) -> Number:
    """Horner evaluation; exact for rational ``x``."""
    acc: Number = Fraction(0) if isinstance(x, int | Fraction) else 0 * x
    for c in reversed(p.coefficients):
        acc = acc * x + (c if isinstance(x, int | Fraction) else float(c))
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coefficients) if i > 0))


def poly_from_roots(roots: Iterable[Coefficient]) -> Polynomial:
    """``prod (x - r)`` over the given rational roots."""
    result = ONE
    for r in roots:
        result = poly_mul(result, Polynomial((-as_fraction(r), Fraction(1))))
    return result


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def quadratic_roots(
    a: Coefficient, b: Coefficient, c: Coefficient
) -> tuple[Root, Root]:
    """Both roots of ``a x^2 + b x + c``, ``+`` branch first.

    Roots are exact rationals when the discriminant is a rational square, a
    real float pair when it is positive otherwise, and an exact conjugate
    complex pair when it is negative.
    """
    fa, fb, fc = as_fraction(a), as_fraction(b), as_fraction(c)
    if fa == 0:
        raise NotQuadraticError("leading coefficient must be non-zero")
    disc = fb * fb - 4 * fa * fc
    exact = _rational_sqrt(disc)
    if exact is not None:
        return (-fb + exact) / (2 * fa), (-fb - exact) / (2 * fa)
    if disc > 0:
        root = math.sqrt(disc)
        return (float(-fb) + root) / float(2 * fa), (float(-fb) - root) / float(2 * fa)
    real = float(-fb / (2 * fa))
    imag = math.sqrt(float(-disc)) / float(2 * fa)
    return complex(real, imag), complex(real, -imag)


def complete_square(a: Coefficient, b: Coefficient, c: Coefficient) -> VertexForm:
    """Rewrite ``a x^2 + b x + c`` as ``a (x - h)^2 - k``."""
    fa, fb, fc = as_fraction(a), as_fraction(b), as_fraction(c)
    if fa == 0:
        raise NotQuadraticError("leading coefficient must be non-zero")
    return VertexForm(fa, -fb / (2 * fa), fb * fb / (4 * fa) - fc)


def lagrange_interpolate(
    points: Sequence[tuple[Coefficient, Coefficient]],
) -> Polynomial:
    """Interpolating polynomial of degree at most ``len(points) - 1``."""
    if not points:
        raise InsufficientPointsError("interpolation needs at least one point")
    xs = [as_fraction(x) for x, _ in points]
    ys = [as_fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("interpolation abscissas must be distinct")
    result = ZERO
    for i, (xi, yi) in enumerate(zip(xs, ys, strict=True)):
        if yi == 0:
            continue
        basis = ONE
        for j, xj in enumerate(xs):
            if j != i:
                basis = poly_mul(basis, Polynomial((-xj / (xi - xj), 1 / (xi - xj))))
        result = poly_add(result, poly_scale(yi, basis))
    return result


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Descending-power text such as ``x^3 + 6*x - 20``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for power in range(p.degree, -1, -1):
        c = p.coefficients[power]
        if c == 0:
            continue
        magnitude = abs(c)
        if power == 0:
            body = _format_coefficient(magnitude)
        else:
            monomial = var if power == 1 else f"{var}^{power}"
            body = (
                monomial
                if magnitude == 1
                else f"{_format_coefficient(magnitude)}*{monomial}"
            )
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


__all__ = [
    "ONE",
    "X",
    "ZERO",
    "ZERO_DEGREE",
    "Polynomial",
    "VertexForm",
    "as_fraction",
    "complete_square",
    "format_poly",
    "lagrange_interpolate",
    "monic",
    "poly_add",
    "poly_derivative",
    "poly_divmod",
    "poly_eval",
    "poly_from_roots",
    "poly_gcd",
    "poly_lcm",
    "poly_mul",
    "poly_neg",
    "poly_scale",
    "poly_sub",
    "polynomial",
    "quadratic_roots",
]

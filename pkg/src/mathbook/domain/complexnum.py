"""Complex numbers in binomial and polar form, phasors and series RLC circuits.

Rectangular values are either exact (:class:`ExactComplex`, rational parts) or
builtin ``complex``. Exact operands give exact results; mixing promotes to
float. Polar arguments are in radians on the principal branch ``(-pi, pi]``.
"""

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mathbook.domain.errors import (
    DivisionByZeroError,
    EmptyListError,
    InvalidCircuitError,
    InvalidInputError,
    ZeroInputError,
)


@dataclass(frozen=True)
class ExactComplex:
    """``re + im i`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @property
    def real(self) -> float:
        return float(self.re)

    @property
    def imag(self) -> float:
        return float(self.im)

    def __complex__(self) -> complex:
        return complex(self.real, self.imag)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


type ComplexLike = ExactComplex | complex


class Polar(NamedTuple):
    """``modulus * e^(i argument)``."""

    modulus: float
    argument: float

    @property
    def degrees(self) -> float:
        return math.degrees(self.argument)


class CircuitSpec(NamedTuple):
    """Series RLC with current amplitude ``i0``; ``c=None`` means no capacitor."""

    i0: float
    w: float
    r: float
    l: float  # noqa: E741
    c: float | None = None


class RlcSource(NamedTuple):
    impedance: complex
    source: Polar
    amplitude: float
    phase: float


class ElementVoltages(NamedTuple):
    resistor: Polar
    inductor: Polar
    capacitor: Polar


def principal_argument(theta: float) -> float:
    """Reduce an angle to ``(-pi, pi]``."""
    reduced = math.remainder(theta, math.tau)
    return math.pi if reduced <= -math.pi else reduced


def phasor(magnitude: float, degrees: float) -> Polar:
    """Phasor ``magnitude ∠ degrees``."""
    return Polar(float(magnitude), principal_argument(math.radians(degrees)))


def _both_exact(z: ComplexLike, w: ComplexLike) -> bool:
    return isinstance(z, ExactComplex) and isinstance(w, ExactComplex)


def _is_zero(z: ComplexLike) -> bool:
    return z.is_zero() if isinstance(z, ExactComplex) else z == 0


def c_mul(z: ComplexLike, w: ComplexLike) -> ComplexLike:
    """``(ac - bd, ad + bc)``."""
    if isinstance(z, ExactComplex) and isinstance(w, ExactComplex):
        return ExactComplex(z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re)
    return complex(z) * complex(w)


def c_conj(z: ComplexLike) -> ComplexLike:
    if isinstance(z, ExactComplex):
        return ExactComplex(z.re, -z.im)
    return complex(z).conjugate()


def c_inv(z: ComplexLike) -> ComplexLike:
    """``conj(z) / (z conj(z))``."""
    if _is_zero(z):
        raise DivisionByZeroError("zero has no inverse")
    if isinstance(z, ExactComplex):
        norm = z.re**2 + z.im**2
        return ExactComplex(z.re / norm, -z.im / norm)
    return 1 / complex(z)


def c_div(z: ComplexLike, w: ComplexLike) -> ComplexLike:
    if _is_zero(w):
        raise DivisionByZeroError("division by zero")
    if _both_exact(z, w):
        return c_mul(z, c_inv(w))
    return complex(z) / complex(w)


def c_abs(z: ComplexLike) -> float:
    return abs(complex(z))


def c_arg(z: ComplexLike) -> float:
    """Principal argument; the argument of zero is 0."""
    if _is_zero(z):
        return 0.0
    return principal_argument(cmath.phase(complex(z)))


def to_polar(z: ComplexLike) -> Polar:
    return Polar(c_abs(z), c_arg(z))


def to_rect(p: Polar) -> complex:
    return cmath.rect(p.modulus, p.argument)


def de_moivre_pow(p: Polar, n: int) -> Polar:
    """``|z|^n e^(i n theta)``."""
    if p.modulus == 0:
        if n < 0:
            raise DivisionByZeroError("zero raised to a negative power")
        return Polar(1.0 if n == 0 else 0.0, 0.0)
    return Polar(p.modulus**n, principal_argument(n * p.argument))


def nth_roots(z: ComplexLike | Polar, n: int) -> list[Polar]:
    """The ``n`` roots ``|z|^(1/n) e^(i (theta + 2 k pi) / n)`` for ``k = 0..n-1``."""
    p = z if isinstance(z, Polar) else to_polar(z)
    if p.modulus == 0:
        raise ZeroInputError("zero has no distinct n-th roots")
    if n < 1:
        raise InvalidInputError(f"root order must be >= 1, got {n}")
    radius = p.modulus ** (1 / n)
    return [
        Polar(radius, principal_argument((p.argument + math.tau * k) / n))
        for k in range(n)
    ]


def phasor_sum(phasors: Sequence[Polar]) -> Polar:
    """Add in binomial form, then return to polar form."""
    if not phasors:
        raise EmptyListError("phasor sum needs at least one term")
    total = sum((to_rect(p) for p in phasors), complex(0))
    if abs(total) < 1e-12 * max(p.modulus for p in phasors):
        return Polar(0.0, 0.0)
    return to_polar(total)


def phasor_mul(p: Polar, q: Polar) -> Polar:
    """Moduli multiply and arguments add."""
    return Polar(p.modulus * q.modulus, principal_argument(p.argument + q.argument))


def phasor_div(p: Polar, q: Polar) -> Polar:
    if q.modulus == 0:
        raise DivisionByZeroError("division by a zero phasor")
    return Polar(p.modulus / q.modulus, principal_argument(p.argument - q.argument))


def circuit_spec(
    i0: float, w: float, r: float, l: float, c: float | None = None  # noqa: E741
) -> CircuitSpec:
    """Validate a series RLC description."""
    if w <= 0:
        raise InvalidCircuitError(f"angular frequency must be positive, got {w}")
    if i0 < 0 or r < 0 or l < 0:
        raise InvalidCircuitError("I0, R and L must be non-negative")
    if c is not None and c <= 0:
        raise InvalidCircuitError(f"capacitance must be positive when present, got {c}")
    return CircuitSpec(i0, w, r, l, c)


def impedances(spec: CircuitSpec) -> tuple[complex, complex, complex]:
    """``Z_R = R``, ``Z_L = j w L`` and ``Z_C = -j / (w C)`` (0 without capacitor)."""
    s = circuit_spec(*spec)
    z_c = complex(0, -1 / (s.w * s.c)) if s.c is not None else complex(0)
    return complex(s.r), complex(0, s.w * s.l), z_c


def series_rlc_source(spec: CircuitSpec) -> RlcSource:
    """Source voltage ``V_s = I0 (R + j (w L - 1/(w C)))`` and its closed form."""
    z_total = sum(impedances(spec), complex(0))
    source = to_polar(spec.i0 * z_total)
    amplitude = spec.i0 * abs(z_total)
    phase = math.atan2(z_total.imag, z_total.real) if z_total else 0.0
    return RlcSource(z_total, source, amplitude, phase)


def series_rlc_current(
    v0: float, w: float, r: float, l: float, c: float | None = None  # noqa: E741
) -> float:
    """Current amplitude ``I0 = V0 / |Z|`` for a source of amplitude ``V0``."""
    z_total = abs(sum(impedances(circuit_spec(0.0, w, r, l, c)), complex(0)))
    if z_total == 0:
        raise DivisionByZeroError("the circuit has zero impedance")
    return v0 / z_total


def element_voltages(spec: CircuitSpec) -> ElementVoltages:
    """Phasor voltage across each element for the current ``I0 ∠ 0``."""
    z_r, z_l, z_c = impedances(spec)
    return ElementVoltages(
        to_polar(spec.i0 * z_r), to_polar(spec.i0 * z_l), to_polar(spec.i0 * z_c)
    )


__all__ = [
    "CircuitSpec",
    "ComplexLike",
    "ElementVoltages",
    "ExactComplex",
    "Polar",
    "RlcSource",
    "c_abs",
    "c_arg",
    "c_conj",
    "c_div",
    "c_inv",
    "c_mul",
    "circuit_spec",
    "de_moivre_pow",
    "element_voltages",
    "impedances",
    "nth_roots",
    "phasor",
    "phasor_div",
    "phasor_mul",
    "phasor_sum",
    "principal_argument",
    "series_rlc_current",
    "series_rlc_source",
    "to_polar",
    "to_rect",
]

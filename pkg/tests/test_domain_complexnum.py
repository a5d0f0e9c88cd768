"""Tests for complex numbers, phasors and series RLC circuits."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import pytest

from mathbook.domain.complexnum import (
    ExactComplex,
    Polar,
    c_abs,
    c_conj,
    c_div,
    c_inv,
    c_mul,
    circuit_spec,
    de_moivre_pow,
    element_voltages,
    nth_roots,
    phasor,
    phasor_div,
    phasor_mul,
    phasor_sum,
    principal_argument,
    series_rlc_current,
    series_rlc_source,
    to_polar,
    to_rect,
)
from mathbook.domain.errors import (
    DivisionByZeroError,
    EmptyListError,
    InvalidCircuitError,
    ZeroInputError,
)


def test_exact_arithmetic() -> None:
    z = ExactComplex(2, -2)
    w = ExactComplex(1, 3)
    assert c_mul(z, w) == ExactComplex(8, 4)
    assert c_div(z, w) == ExactComplex(Fraction(-2, 5), Fraction(-4, 5))
    assert c_conj(w) == ExactComplex(1, -3)
    assert c_inv(ExactComplex(0, 1)) == ExactComplex(0, -1)
    with pytest.raises(DivisionByZeroError):
        c_div(z, ExactComplex(0))


def test_mixed_operands_promote_to_float() -> None:
    assert c_mul(ExactComplex(1, 1), 2j) == pytest.approx(-2 + 2j)


def test_polar_conversion() -> None:
    p = to_polar(ExactComplex(-1, 0))
    assert p.modulus == pytest.approx(1.0)
    assert p.argument == pytest.approx(math.pi)
    assert to_rect(Polar(2, math.pi / 2)) == pytest.approx(2j)
    assert to_polar(ExactComplex(0)) == Polar(0.0, 0.0)


def test_principal_argument_range() -> None:
    assert principal_argument(-math.pi) == pytest.approx(math.pi)
    assert principal_argument(3 * math.pi) == pytest.approx(math.pi)
    assert principal_argument(math.tau + 0.5) == pytest.approx(0.5)


def test_de_moivre_power() -> None:
    p = de_moivre_pow(to_polar(ExactComplex(1, 1)), 8)
    assert to_rect(p) == pytest.approx(16 + 0j, abs=1e-9)
    with pytest.raises(DivisionByZeroError):
        de_moivre_pow(Polar(0.0, 0.0), -1)


def test_square_roots_of_minus_one() -> None:
    roots = [to_rect(r) for r in nth_roots(ExactComplex(-1), 2)]
    assert roots[0] == pytest.approx(1j, abs=1e-12)
    assert roots[1] == pytest.approx(-1j, abs=1e-12)


def test_nth_roots_raise_back_to_the_input() -> None:
    z = complex(3, -4)
    for root in nth_roots(z, 5):
        assert to_rect(root) ** 5 == pytest.approx(z, abs=1e-9)
    with pytest.raises(ZeroInputError):
        nth_roots(0j, 3)


def test_phasor_sum_worked_example() -> None:
    total = phasor_sum([phasor(10, 60), phasor(5, 45)])
    assert total.modulus == pytest.approx(14.89, abs=0.01)
    assert total.degrees == pytest.approx(55.0, abs=0.5)
    with pytest.raises(EmptyListError):
        phasor_sum([])


def test_phasor_mul_and_div() -> None:
    product = phasor_mul(phasor(2, 30), phasor(3, 60))
    assert product.modulus == pytest.approx(6.0)
    assert product.degrees == pytest.approx(90.0)
    quotient = phasor_div(phasor(6, 90), phasor(3, 60))
    assert to_rect(quotient) == pytest.approx(cmath.rect(2, math.radians(30)))


def test_series_rlc_worked_example() -> None:
    w = math.tau * 60
    spec = circuit_spec(120 / 32.33, w, 12, 0.15, 1e-4)
    source = series_rlc_source(spec)
    assert source.impedance.imag == pytest.approx(56.549 - 26.526, abs=1e-3)
    assert abs(source.impedance) == pytest.approx(32.33, abs=0.01)
    assert source.amplitude == pytest.approx(120, abs=0.1)
    voltages = element_voltages(spec)
    assert voltages.inductor.modulus == pytest.approx(209.9, abs=0.2)
    assert voltages.inductor.degrees == pytest.approx(90.0)
    assert voltages.capacitor.degrees == pytest.approx(-90.0)
    assert series_rlc_current(120, w, 12, 0.15, 1e-4) == pytest.approx(3.711, abs=1e-3)


def test_circuit_without_capacitor() -> None:
    spec = circuit_spec(1.0, 100.0, 3.0, 0.04)
    assert abs(series_rlc_source(spec).impedance) == pytest.approx(5.0)
    assert element_voltages(spec).capacitor.modulus == 0.0


def test_circuit_validation() -> None:
    with pytest.raises(InvalidCircuitError):
        circuit_spec(1.0, 0.0, 1.0, 1.0)
    with pytest.raises(InvalidCircuitError):
        circuit_spec(1.0, 1.0, 1.0, 1.0, 0.0)


def _random_exact(rng: random.Random) -> ExactComplex:
    return ExactComplex(
        Fraction(rng.randint(-40, 40), rng.randint(1, 6)),
        Fraction(rng.randint(-40, 40), rng.randint(1, 6)),
    )


def test_modulus_and_conjugate_laws() -> None:
    rng = random.Random(21)
    for _ in range(200):
        z, w = _random_exact(rng), _random_exact(rng)
        assert c_abs(c_mul(z, w)) == pytest.approx(c_abs(z) * c_abs(w))
        assert c_conj(c_conj(z)) == z
        assert c_mul(z, c_conj(z)) == ExactComplex(z.re**2 + z.im**2, 0)
        assert c_conj(c_mul(z, w)) == c_mul(c_conj(z), c_conj(w))

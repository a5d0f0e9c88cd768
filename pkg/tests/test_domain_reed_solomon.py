"""Tests for interpolation Reed-Solomon codes."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mathbook.domain.errors import LengthMismatchError
from mathbook.domain.reed_solomon import (
    codeword,
    rs_correct,
    rs_decode,
    rs_encode,
    rs_interpolant,
    rs_verify,
)

DATA = ("1.2", "-3.2", "-5.4", "-1.1")
CORRUPTED = ("1.2", "3.2", "-5.4", "-1.1", "12.8", "44.2", "93.8", "167.1")


def test_encode_appends_redundancy() -> None:
    cw = rs_encode(DATA)
    assert cw.k == 4
    assert cw.values[4:] == (
        Fraction(14),
        Fraction("44.2"),
        Fraction("93.8"),
        Fraction("167.1"),
    )
    assert rs_verify(cw)
    assert rs_decode(cw) == tuple(Fraction(v) for v in DATA)


def test_corrupted_codeword_fails_the_degree_test() -> None:
    cw = codeword(CORRUPTED)
    assert not rs_verify(cw)
    assert rs_decode(cw) is None
    assert rs_interpolant(cw).degree > 3


def test_two_errors_are_repaired() -> None:
    fix = rs_correct(codeword(CORRUPTED), 2)
    assert fix is not None
    assert fix.error_positions == (2, 5)
    assert fix.corrected_values == (Fraction(-16, 5), Fraction(14))
    assert fix.data == tuple(Fraction(v) for v in DATA)


def test_too_many_errors_for_the_budget() -> None:
    assert rs_correct(codeword(CORRUPTED), 1) is None


def test_single_error_repair_for_every_position() -> None:
    data = (3, -1, 4, 1, 5)
    clean = rs_encode(data)
    for position in range(1, 2 * clean.k + 1):
        values = list(clean.values)
        values[position - 1] += 7
        fix = rs_correct(codeword(values), 1)
        assert fix is not None
        assert fix.error_positions == (position,)
        assert fix.data == tuple(Fraction(v) for v in data)


def test_intact_codeword_needs_no_repair() -> None:
    fix = rs_correct(rs_encode(DATA), 2)
    assert fix is not None
    assert fix.error_positions == ()


def test_odd_length_is_rejected() -> None:
    with pytest.raises(LengthMismatchError):
        codeword([1, 2, 3])


def test_float_data_is_read_exactly() -> None:
    cw = rs_encode([1.2, -3.2, -5.4, -1.1])
    assert cw.values[:4] == (
        Fraction(6, 5),
        Fraction(-16, 5),
        Fraction(-27, 5),
        Fraction(-11, 10),
    )
    assert cw.values[4:] == (
        Fraction(14),
        Fraction("44.2"),
        Fraction("93.8"),
        Fraction("167.1"),
    )
    assert rs_verify(cw)


def test_five_value_code_with_one_bad_entry() -> None:
    cw = codeword([2, 3, 6, 7, 11, 22, 48, 100, 192, 341])
    assert not rs_verify(cw)
    fix = rs_correct(cw, 2)
    assert fix is not None
    assert fix.error_positions == (3,)
    assert fix.corrected_values == (Fraction(5),)
    assert fix.data == (2, 3, 5, 7, 11)
    assert rs_encode(fix.data).values[5:] == (22, 48, 100, 192, 341)


def test_single_error_repair_for_random_data() -> None:
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(2, 5)
        data = tuple(
            Fraction(rng.randint(-50, 50), rng.randint(1, 4)) for _ in range(k)
        )
        clean = rs_encode(data)
        position = rng.randint(1, 2 * k)
        values = list(clean.values)
        shift = Fraction(rng.randint(1, 30), 3)
        values[position - 1] += rng.choice((-1, 1)) * shift
        damaged = codeword(values)
        assert not rs_verify(damaged)
        fix = rs_correct(damaged, 1)
        assert fix is not None
        assert fix.error_positions == (position,)
        assert fix.data == data

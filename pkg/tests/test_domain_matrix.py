"""Tests for exact matrix algebra."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from mathbook.domain.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidInputError,
    NonSquareError,
)
from mathbook.domain.literals import parse_matrix
from mathbook.domain.matrix import (
    Matrix,
    add,
    determinant,
    gauss_solve,
    hadamard,
    identity,
    invert,
    mat_inv_mod,
    mat_mod,
    mat_pow,
    matmul,
    matrix,
    path_count,
    scale,
    solve_residual,
    transpose,
)

ROAD_NETWORK = "0 2 0 1 3; 2 0 1 0 1; 0 1 0 1 0; 1 0 1 0 2; 3 1 0 2 0"
ROAD_NETWORK_SQUARED = (
    "14 3 3 6 4; 3 6 0 5 6; 3 0 2 0 3; 6 5 0 6 3; 4 6 3 3 14"
)
DATA = Path(__file__).parents[1] / "data"


def _random_matrix(rng: random.Random, n_rows: int, n_cols: int) -> Matrix:
    return matrix(
        [[rng.randint(-9, 9) for _ in range(n_cols)] for _ in range(n_rows)]
    )


def test_ragged_rows_are_rejected() -> None:
    with pytest.raises(DimensionMismatchError):
        matrix([[1, 2], [3]])


def test_elementwise_operations() -> None:
    a = matrix([[1, 2], [3, 4]])
    b = matrix([[5, 6], [7, 8]])
    assert add(a, b) == matrix([[6, 8], [10, 12]])
    assert hadamard(a, b) == matrix([[5, 12], [21, 32]])
    assert scale(2, a) == matrix([[2, 4], [6, 8]])
    assert transpose(matrix([[1, 2, 3]])) == matrix([[1], [2], [3]])
    with pytest.raises(DimensionMismatchError):
        add(a, matrix([[1, 2, 3]]))


def test_falk_product() -> None:
    a = parse_matrix("2 1; -1 0; 4 3")
    b = parse_matrix("-1 1 -3/2; 0 1/2 1")
    assert matmul(a, b) == parse_matrix("-2 5/2 -2; 1 -1 3/2; -4 11/2 -3")
    with pytest.raises(DimensionMismatchError):
        matmul(a, a)


def test_determinant() -> None:
    assert determinant(matrix([[2, -1], [0, 3]])) == 6
    assert determinant(matrix([[0, 1], [1, 0]])) == -1
    assert determinant(matrix([[1, 2], [2, 4]])) == 0
    assert determinant(parse_matrix("0 -1 3; 1 2 -1; -2 3 1")) == 20
    with pytest.raises(NonSquareError):
        determinant(matrix([[1, 2]]))


def test_determinant_is_multiplicative() -> None:
    a = matrix([[1, 2, 0], [3, -1, 4], [0, 5, 2]])
    b = matrix([[2, 0, 1], [1, 1, 0], [-3, 2, 2]])
    assert determinant(matmul(a, b)) == determinant(a) * determinant(b)


def test_inverse() -> None:
    a = matrix([[2, -1], [0, 3]])
    inverse = invert(a)
    assert inverse == parse_matrix("1/2 1/6; 0 1/3")
    assert inverse is not None
    assert matmul(a, inverse) == identity(2)
    assert invert(matrix([[1, 2], [2, 4]])) is None


def test_gauss_solve_unique() -> None:
    a = parse_matrix("0 -1 3; 1 2 -1; -2 3 1")
    outcome = gauss_solve(a, (2, -2, 0))
    assert outcome.status == "unique"
    assert outcome.solution == (Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2))
    assert outcome.solution is not None
    assert solve_residual(a, outcome.solution, (2, -2, 0)) == (0, 0, 0)


def test_gauss_solve_singular_systems() -> None:
    a = matrix([[1, 1], [2, 2]])
    assert gauss_solve(a, (1, 3)).status == "inconsistent"
    assert gauss_solve(a, (1, 2)).status == "underdetermined"
    assert gauss_solve(a, (1, 2)).solution is None
    with pytest.raises(DimensionMismatchError):
        gauss_solve(a, (1,))


def test_modular_inverse_of_hill_key() -> None:
    key = parse_matrix("3 2; 5 3")
    inverse = mat_inv_mod(key, 26)
    assert inverse == parse_matrix("23 2; 5 23")
    assert inverse is not None
    assert mat_mod(matmul(key, inverse), 26) == identity(2)
    assert mat_inv_mod(matrix([[2, 0], [0, 1]]), 26) is None


def test_mat_mod_requires_integers() -> None:
    with pytest.raises(InvalidInputError):
        mat_mod(parse_matrix("1/2 1"), 5)


def test_mat_pow() -> None:
    fib = matrix([[1, 1], [1, 0]])
    assert mat_pow(fib, 0) == identity(2)
    assert mat_pow(fib, 10) == matrix([[89, 55], [55, 34]])


def test_path_count_on_road_network() -> None:
    road = parse_matrix(ROAD_NETWORK)
    assert path_count(road, 5, 3, 2) == 3
    assert path_count(road, 1, 2, 1) == 2
    with pytest.raises(IndexOutOfRangeError):
        path_count(road, 6, 1, 2)


def test_path_count_rejects_asymmetric_incidence() -> None:
    with pytest.raises(InvalidInputError):
        path_count(matrix([[0, 1], [0, 0]]), 1, 2, 1)


def test_random_inverses_multiply_to_identity() -> None:
    rng = random.Random(3)
    checked = 0
    while checked < 50:
        n = rng.randint(1, 4)
        a = _random_matrix(rng, n, n)
        inverse = invert(a)
        if determinant(a) == 0:
            assert inverse is None
            continue
        checked += 1
        assert inverse is not None
        assert matmul(a, inverse) == identity(n)
        assert matmul(inverse, a) == identity(n)


def test_transpose_laws_on_random_matrices() -> None:
    rng = random.Random(17)
    for _ in range(50):
        n, k, m = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = _random_matrix(rng, n, k)
        b = _random_matrix(rng, k, m)
        assert transpose(matmul(a, b)) == matmul(transpose(b), transpose(a))
        square = _random_matrix(rng, n, n)
        assert determinant(transpose(square)) == determinant(square)
        other = _random_matrix(rng, n, n)
        assert determinant(matmul(square, other)) == determinant(
            square
        ) * determinant(other)


def _walks(rows: list[list[int]], start: int, end: int, length: int) -> int:
    if length == 0:
        return int(start == end)
    return sum(
        edges * _walks(rows, nxt, end, length - 1)
        for nxt, edges in enumerate(rows[start])
        if edges
    )


def test_road_network_squared() -> None:
    road = parse_matrix(ROAD_NETWORK)
    assert mat_pow(road, 2) == parse_matrix(ROAD_NETWORK_SQUARED)
    rows = [[int(x) for x in row] for row in road.rows]
    for length in (1, 2, 3):
        for i in range(1, 6):
            for j in range(1, 6):
                expected = _walks(rows, i - 1, j - 1, length)
                assert path_count(road, i, j, length) == expected


def test_diet_system_has_zero_residual() -> None:
    augmented = parse_matrix((DATA / "diet_system.txt").read_text(encoding="utf-8"))
    a = matrix([row[:-1] for row in augmented.rows])
    b = [row[-1] for row in augmented.rows]
    outcome = gauss_solve(a, b)
    assert outcome.status == "unique"
    assert outcome.solution == (
        Fraction(7, 2),
        Fraction(-2, 3),
        Fraction(3, 2),
        Fraction(1, 6),
        Fraction(1, 3),
    )
    assert solve_residual(a, outcome.solution, b) == (0, 0, 0, 0, 0)

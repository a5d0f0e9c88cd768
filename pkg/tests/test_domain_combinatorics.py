"""Tests for counting formulas and binomial probabilities."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from mathbook.domain.combinatorics import (
    CountSpec,
    bernoulli_spec,
    binomial,
    binomial_pmf,
    binomial_pmf_exact,
    comb,
    comb_rep,
    dice_sum_probability,
    factorial,
    pascal_row,
    perm,
    perm_rep,
)
from mathbook.domain.errors import (
    InvalidInputError,
    InvalidProbabilityError,
    InvalidSelectionError,
)


def test_factorial_and_binomial() -> None:
    assert factorial(0) == 1
    assert factorial(10) == 3628800
    assert binomial(9, 4) == 126
    assert binomial(3, 5) == 0
    with pytest.raises(InvalidInputError):
        factorial(-1)


def test_selection_counts() -> None:
    assert perm(26, 3) == 15600
    assert perm_rep(26, 3) == 17576
    assert comb(49, 6) == 13983816
    assert comb_rep(5, 3) == 35
    assert comb_rep(0, 0) == 1


def test_selection_counts_agree_with_enumeration() -> None:
    items = range(5)
    assert perm(5, 3) == len(list(itertools.permutations(items, 3)))
    assert comb(5, 3) == len(list(itertools.combinations(items, 3)))
    assert comb_rep(5, 3) == len(
        list(itertools.combinations_with_replacement(items, 3))
    )
    assert perm_rep(5, 3) == len(list(itertools.product(items, repeat=3)))


def test_selection_larger_than_pool_is_rejected() -> None:
    with pytest.raises(InvalidSelectionError):
        perm(3, 4)
    with pytest.raises(InvalidSelectionError):
        comb(3, 4)


def test_count_spec_pool_check() -> None:
    assert CountSpec(26, 3).fits_pool
    assert CountSpec(3, 3).fits_pool
    assert not CountSpec(3, 4).fits_pool
    assert perm(*CountSpec(26, 3)) == 15600
    assert comb_rep(*CountSpec(5, 4)) == 70


def test_pascal_rows_follow_the_addition_rule() -> None:
    assert pascal_row(0) == [1]
    assert pascal_row(4) == [1, 4, 6, 4, 1]
    for n in range(1, 25):
        prev, row = pascal_row(n - 1), pascal_row(n)
        assert row == [binomial(n, k) for k in range(n + 1)]
        assert all(row[k] == prev[k - 1] + prev[k] for k in range(1, n))


def test_binomial_pmf_worked_example() -> None:
    assert binomial_pmf(bernoulli_spec(30, Fraction(1, 2), 13)) == pytest.approx(
        0.111535, abs=1e-6
    )


def test_binomial_pmf_is_normalized() -> None:
    total = sum(
        binomial_pmf_exact(bernoulli_spec(12, "1/3", x)) for x in range(13)
    )
    assert total == 1


def test_bernoulli_spec_validates() -> None:
    with pytest.raises(InvalidProbabilityError):
        bernoulli_spec(5, 1.5, 2)
    with pytest.raises(InvalidInputError):
        bernoulli_spec(5, 0.5, 6)


def test_dice_sum_probability() -> None:
    assert dice_sum_probability(5) == Fraction(1, 9)
    assert dice_sum_probability(7) == Fraction(1, 6)
    assert dice_sum_probability(1) == 0
    assert sum(dice_sum_probability(t, 3) for t in range(3, 19)) == 1

"""Tests for entropy and codon statistics."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from mathbook.domain.errors import (
    InvalidCountError,
    InvalidDistributionError,
    InvalidProbabilityError,
    ParseError,
)
from mathbook.domain.information import (
    distribution,
    entropy_from_counts,
    mix_sources,
    parse_sequence,
    self_information,
    sequence_entropy,
    shannon_entropy,
    sliding_codons,
    uniform_information,
)

ECOLI_FRAGMENT = "AGCTTTTCATTCTGACTGCAACGGGCAATATG"


def test_uniform_information() -> None:
    assert uniform_information(1) == 0.0
    assert uniform_information(64) == pytest.approx(6.0)
    with pytest.raises(InvalidCountError):
        uniform_information(0)


def test_self_information() -> None:
    assert self_information(Fraction(1, 8)) == pytest.approx(3.0)
    with pytest.raises(InvalidProbabilityError):
        self_information(0)


def test_entropy_of_fair_and_certain_sources() -> None:
    assert shannon_entropy(distribution([0.5, 0.5])) == pytest.approx(1.0)
    assert shannon_entropy(distribution([1.0])) == 0.0
    assert entropy_from_counts([1] * 64) == pytest.approx(6.0)


def test_entropy_is_bounded_by_uniform() -> None:
    d = distribution([0.5, 0.25, 0.125, 0.125])
    assert shannon_entropy(d) == pytest.approx(1.75)
    assert shannon_entropy(d) <= math.log2(len(d))


def test_distribution_validation() -> None:
    with pytest.raises(InvalidDistributionError):
        distribution([0.5, 0.4])
    with pytest.raises(InvalidDistributionError):
        distribution([1.0, 0.0])
    with pytest.raises(InvalidDistributionError):
        distribution([])


def test_mixed_sources_add_choice_entropy() -> None:
    fair = distribution([0.5, 0.5])
    mixed = mix_sources([(0.5, fair), (0.5, fair)])
    assert mixed.probabilities == (0.25, 0.25, 0.25, 0.25)
    assert shannon_entropy(mixed) == pytest.approx(2.0)


def test_sliding_codons_on_fragment() -> None:
    counts = sliding_codons(ECOLI_FRAGMENT)
    assert counts.total == 30
    assert counts.get("TTT") == 2
    assert counts.get("CAA") == 2
    assert counts.get("AAT") == 1
    assert counts.get("GGG") == 1
    assert counts.get("CCC") == 0


def test_sequence_entropy_worked_example() -> None:
    assert sequence_entropy(ECOLI_FRAGMENT) == pytest.approx(4.5736, abs=1e-4)
    assert sequence_entropy("AAAA") == 0.0


def test_parse_sequence_accepts_fasta() -> None:
    assert parse_sequence(">chr\nacgt\nTT\n") == "ACGTTT"
    with pytest.raises(ParseError):
        parse_sequence("ACGU")
    with pytest.raises(ParseError):
        sliding_codons("AC")


def test_uniform_source_has_the_most_entropy() -> None:
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 12)
        weights = [rng.uniform(0.01, 1) for _ in range(n)]
        total = math.fsum(weights)
        d = distribution([w / total for w in weights])
        assert shannon_entropy(d) <= uniform_information(n) + 1e-12
        assert shannon_entropy(distribution([1 / n] * n)) == pytest.approx(
            uniform_information(n)
        )

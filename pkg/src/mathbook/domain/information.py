"""Shannon entropy, information measures and overlapping-codon DNA analysis."""

import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from mathbook.domain.errors import (
    InvalidCountError,
    InvalidDistributionError,
    InvalidProbabilityError,
    ParseError,
)

NORMALIZATION_TOLERANCE = 1e-9
DNA_ALPHABET = frozenset("ACGT")
CODON_WIDTH = 3


@dataclass(frozen=True)
class Distribution:
    """Probabilities of the messages a source can emit, each in (0, 1]."""

    probabilities: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True)
class CodonCounts:
    """Overlapping codon counts of a sequence, sorted by codon."""

    counts: tuple[tuple[str, int], ...]

    @property
    def total(self) -> int:
        return sum(count for _, count in self.counts)

    def get(self, codon: str) -> int:
        return dict(self.counts).get(codon.upper(), 0)


def distribution(probabilities: Iterable[float | Fraction]) -> Distribution:
    """Validate probabilities and build a distribution.

    Zero-probability messages are rejected; drop them before calling.
    """
    probs = tuple(float(p) for p in probabilities)
    if not probs:
        raise InvalidDistributionError("a distribution needs at least one message")
    for p in probs:
        if not 0 < p <= 1:
            raise InvalidDistributionError(f"probability {p} is outside (0, 1]")
    total = math.fsum(probs)
    if abs(total - 1) > NORMALIZATION_TOLERANCE:
        raise InvalidDistributionError(f"probabilities sum to {total}, not 1")
    return Distribution(probs)


def uniform_information(n_messages: int) -> float:
    """Information of a source with ``n`` equiprobable messages, ``log2 n`` bits."""
    if n_messages < 1:
        raise InvalidCountError(f"need at least one message, got {n_messages}")
    return math.log2(n_messages)


def self_information(p: float | Fraction) -> float:
    """Bits carried by a single message of probability ``p``."""
    if not 0 < p <= 1:
        raise InvalidProbabilityError(f"probability {p} is outside (0, 1]")
    return -math.log2(p)


def shannon_entropy(d: Distribution) -> float:
    """``-sum p log2 p`` in bits."""
    return max(0.0, -math.fsum(p * math.log2(p) for p in d.probabilities))


def entropy_from_counts(counts: Iterable[int]) -> float:
    """Entropy of the empirical distribution given by positive counts."""
    values = list(counts)
    if not values or any(c <= 0 for c in values):
        raise InvalidCountError("counts must be a non-empty list of positive integers")
    total = sum(values)
    return shannon_entropy(distribution(Fraction(c, total) for c in values))


def mix_sources(
    weighted: Sequence[tuple[float | Fraction, Distribution]],
) -> Distribution:
    """Combine sources picked with the given weights into one distribution.

    Messages of different sources are treated as distinct, so the result lists
    every message of every source scaled by its source weight.
    """
    if not weighted:
        raise InvalidDistributionError("need at least one source")
    weights = [float(w) for w, _ in weighted]
    distribution(weights)
    return distribution(
        w * p for w, (_, source) in zip(weights, weighted, strict=True)
        for p in source.probabilities
    )


def parse_sequence(text: str) -> str:
    """Extract a DNA sequence from raw or FASTA-like text.

    Header lines starting with ``>`` are ignored; whitespace is dropped and
    letters are upper-cased.
    """
    body = "".join(
        line for line in text.splitlines() if not line.lstrip().startswith(">")
    )
    sequence = "".join(body.split()).upper()
    bad = sorted(set(sequence) - DNA_ALPHABET)
    if bad:
        raise ParseError(f"unexpected bases {''.join(bad)!r}; expected A, C, G, T")
    return sequence


def sliding_codons(sequence: str) -> CodonCounts:
    """Count width-3 windows at stride 1, so ``TTTT`` holds ``TTT`` twice."""
    seq = parse_sequence(sequence)
    if len(seq) < CODON_WIDTH:
        raise ParseError(f"sequence needs at least {CODON_WIDTH} bases, got {len(seq)}")
    windows = Counter(seq[i : i + CODON_WIDTH] for i in range(len(seq) - 2))
    return CodonCounts(tuple(sorted(windows.items())))


def codon_distribution(counts: CodonCounts) -> Distribution:
    """Empirical codon distribution in codon-sorted order."""
    total = counts.total
    return distribution(Fraction(count, total) for _, count in counts.counts)


def sequence_entropy(sequence: str) -> float:
    """Entropy in bits of the overlapping-codon distribution of a sequence."""
    return shannon_entropy(codon_distribution(sliding_codons(sequence)))


__all__ = [
    "CodonCounts",
    "Distribution",
    "codon_distribution",
    "distribution",
    "entropy_from_counts",
    "mix_sources",
    "parse_sequence",
    "self_information",
    "sequence_entropy",
    "shannon_entropy",
    "sliding_codons",
    "uniform_information",
]

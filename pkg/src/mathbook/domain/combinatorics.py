"""Counting formulas and the binomial probability mass function."""

import itertools
import math
from fractions import Fraction
from typing import NamedTuple

from mathbook.domain.errors import (
    InvalidInputError,
    InvalidProbabilityError,
    InvalidSelectionError,
)


class CountSpec(NamedTuple):
    """Pool size ``n`` and selection size ``k``."""

    n: int
    k: int

    @property
    def fits_pool(self) -> bool:
        """Whether ``k`` distinct items can be drawn from the pool."""
        return self.k <= self.n


class BernoulliSpec(NamedTuple):
    """``n`` independent trials with success probability ``p``; ``x`` successes."""

    n: int
    p: Fraction
    x: int

    @property
    def q(self) -> Fraction:
        return 1 - self.p


def _require_non_negative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise InvalidInputError(f"{name} must be >= 0, got {value}")


def _count_spec(n: int, k: int) -> CountSpec:
    _require_non_negative(n=n, k=k)
    return CountSpec(n, k)


def factorial(n: int) -> int:
    """``n!`` with ``0! == 1``."""
    _require_non_negative(n=n)
    return math.factorial(n)


def binomial(p: int, q: int) -> int:
    """Binomial coefficient; zero when ``q > p``."""
    _require_non_negative(p=p, q=q)
    return math.comb(p, q)


def perm(n: int, k: int) -> int:
    """Ordered selections without repetition, ``n! / (n-k)!``."""
    spec = _count_spec(n, k)
    if not spec.fits_pool:
        raise InvalidSelectionError(f"cannot arrange {k} items out of {n}")
    return math.perm(spec.n, spec.k)


def comb(n: int, k: int) -> int:
    """Unordered selections without repetition; requires ``k <= n``."""
    spec = _count_spec(n, k)
    if not spec.fits_pool:
        raise InvalidSelectionError(f"cannot choose {k} items out of {n}")
    return math.comb(spec.n, spec.k)


def perm_rep(n: int, k: int) -> int:
    """Ordered selections with repetition, ``n^k``."""
    spec = _count_spec(n, k)
    return spec.n**spec.k


def comb_rep(n: int, k: int) -> int:
    """Multisets of size ``k`` from ``n`` kinds, ``C(n+k-1, k)``."""
    spec = _count_spec(n, k)
    if spec.n == 0:
        return 1 if spec.k == 0 else 0
    return math.comb(spec.n + spec.k - 1, spec.k)


def pascal_row(n: int) -> list[int]:
    """Row ``n`` of Pascal's triangle, built additively from row 0."""
    _require_non_negative(n=n)
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0, *row], [*row, 0], strict=True)]
    return row


def bernoulli_spec(n: int, p: Fraction | float | str, x: int) -> BernoulliSpec:
    """Validate and build a Bernoulli spec; ``p`` is kept exact."""
    _require_non_negative(n=n)
    prob = Fraction(p)
    if not 0 <= prob <= 1:
        raise InvalidProbabilityError(f"p must be in [0, 1], got {p}")
    if not 0 <= x <= n:
        raise InvalidInputError(f"x must be in [0, {n}], got {x}")
    return BernoulliSpec(n, prob, x)


def binomial_pmf_exact(spec: BernoulliSpec) -> Fraction:
    """``C(n, x) p^x q^(n-x)`` as an exact rational."""
    return binomial(spec.n, spec.x) * spec.p**spec.x * spec.q ** (spec.n - spec.x)


def binomial_pmf(spec: BernoulliSpec) -> float:
    """Binomial probability, computed exactly and converted last."""
    return float(binomial_pmf_exact(spec))


def dice_sum_probability(total: int, dice: int = 2, faces: int = 6) -> Fraction:
    """Probability that ``dice`` fair dice add up to ``total``, by enumeration."""
    if dice < 1 or faces < 1:
        raise InvalidInputError("dice and faces must be >= 1")
    outcomes = itertools.product(range(1, faces + 1), repeat=dice)
    hits = sum(1 for roll in outcomes if sum(roll) == total)
    return Fraction(hits, faces**dice)


__all__ = [
    "BernoulliSpec",
    "CountSpec",
    "bernoulli_spec",
    "binomial",
    "binomial_pmf",
    "binomial_pmf_exact",
    "comb",
    "comb_rep",
    "dice_sum_probability",
    "factorial",
    "pascal_row",
    "perm",
    "perm_rep",
]

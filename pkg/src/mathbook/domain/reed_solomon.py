"""Interpolation-form Reed-Solomon codes over the rationals.

Data values sit at positions ``1..k``; the degree ``k-1`` interpolant is then
evaluated at ``k+1..2k`` to produce as many redundant values. A codeword is
intact when all ``2k`` points lie on one polynomial of degree ``k-1`` or less.
"""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mathbook.domain.errors import InvalidInputError, LengthMismatchError
from mathbook.domain.polynomials import (
    Coefficient,
    Polynomial,
    as_fraction,
    lagrange_interpolate,
    poly_eval,
)


@dataclass(frozen=True)
class RsCodeword:
    """``2k`` values at implicit positions ``x = 1..2k``."""

    values: tuple[Fraction, ...]
    k: int

    def __post_init__(self) -> None:
        values = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.k < 1 or len(self.values) != 2 * self.k:
            raise LengthMismatchError(
                f"a codeword with k={self.k} needs {2 * self.k} values, "
                f"got {len(self.values)}"
            )

    @property
    def data(self) -> tuple[Fraction, ...]:
        return self.values[: self.k]


class RsCorrection(NamedTuple):
    """Recovered data plus the 1-based positions that were replaced."""

    data: tuple[Fraction, ...]
    error_positions: tuple[int, ...]
    corrected_values: tuple[Fraction, ...]


def codeword(values: Sequence[Coefficient]) -> RsCodeword:
    """Wrap received values; the data length is half the codeword length."""
    if len(values) % 2:
        raise LengthMismatchError(f"codeword length must be even, got {len(values)}")
    return RsCodeword(tuple(as_fraction(v) for v in values), len(values) // 2)


def _points(
    values: Sequence[Fraction], positions: Sequence[int]
) -> list[tuple[int, Fraction]]:
    return [(x, values[x - 1]) for x in positions]


def rs_encode(data: Sequence[Coefficient]) -> RsCodeword:
    """Append the interpolant's values at ``k+1..2k`` to the data."""
    if not data:
        raise InvalidInputError("cannot encode empty data")
    values = tuple(as_fraction(v) for v in data)
    k = len(values)
    interpolant = lagrange_interpolate(_points(values, range(1, k + 1)))
    redundancy = tuple(
        Fraction(poly_eval(interpolant, x)) for x in range(k + 1, 2 * k + 1)
    )
    return RsCodeword(values + redundancy, k)


def rs_interpolant(cw: RsCodeword) -> Polynomial:
    """Polynomial through all ``2k`` received points."""
    return lagrange_interpolate(_points(cw.values, range(1, 2 * cw.k + 1)))


def rs_verify(cw: RsCodeword) -> bool:
    """True when the full interpolant has degree at most ``k-1``."""
    return rs_interpolant(cw).degree <= cw.k - 1


def rs_decode(cw: RsCodeword) -> tuple[Fraction, ...] | None:
    """Data of an intact codeword, or None when the degree test fails."""
    return cw.data if rs_verify(cw) else None


def rs_correct(cw: RsCodeword, max_errors: int) -> RsCorrection | None:
    """Repair up to ``max_errors`` values by omitting positions.

    Subsets are tried by ascending size, then in lexicographic order; the first
    subset whose remaining points fit a degree ``k-1`` polynomial wins. Subsets
    that would leave ``k`` points or fewer are skipped since any such set fits.
    """
    if max_errors < 0:
        raise InvalidInputError(f"max_errors must be >= 0, got {max_errors}")
    if rs_verify(cw):
        return RsCorrection(cw.data, (), ())
    positions = range(1, 2 * cw.k + 1)
    for size in range(1, max_errors + 1):
        if 2 * cw.k - size <= cw.k:
            break
        for omitted in itertools.combinations(positions, size):
            kept = [x for x in positions if x not in omitted]
            candidate = lagrange_interpolate(_points(cw.values, kept))
            if candidate.degree > cw.k - 1:
                continue
            repaired = list(cw.values)
            for x in omitted:
                repaired[x - 1] = Fraction(poly_eval(candidate, x))
            return RsCorrection(
                tuple(repaired[: cw.k]),
                omitted,
                tuple(repaired[x - 1] for x in omitted),
            )
    return None


__all__ = [
    "RsCodeword",
    "RsCorrection",
    "codeword",
    "rs_correct",
    "rs_decode",
    "rs_encode",
    "rs_interpolant",
    "rs_verify",
]

"""Integer arithmetic: congruences, primes, gcd/lcm, CRT, Z_m tables and ISBN-10.

All functions work on Python ``int`` (arbitrary precision) and are pure.
Residues are always the mathematical representative in ``[0, m)``.
"""

import math
from collections.abc import Iterable
from typing import Literal, NamedTuple

from mathbook.domain.errors import (
    EmptyRangeError,
    InvalidInputError,
    InvalidModulusError,
    ParseError,
    UnsupportedCriterionError,
)

type TableOp = Literal["add", "mul"]

SUPPORTED_DIVISORS: tuple[int, ...] = (2, 3, 4, 5, 8, 9, 10, 11)

# Miller-Rabin with the first 13 primes is exact below this bound.
_MR_SMALL_BASES: tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_SMALL_BOUND = 3_317_044_064_679_887_385_961_981
_TRIAL_LIMIT = 1_000


class Congruence(NamedTuple):
    """Class ``residue`` modulo ``modulus`` with ``0 <= residue < modulus``."""

    residue: int
    modulus: int


class PrimePower(NamedTuple):
    prime: int
    exponent: int


type Factorization = tuple[PrimePower, ...]


class EuclidStep(NamedTuple):
    """One row of Euclid's division table: dividend = quotient*divisor + remainder."""

    dividend: int
    divisor: int
    quotient: int
    remainder: int


def _require_modulus(m: int, *, minimum: int) -> None:
    if m < minimum:
        raise InvalidModulusError(f"modulus must be >= {minimum}, got {m}")


def congruence(residue: int, modulus: int) -> Congruence:
    """Build a normalized congruence class; modulus must exceed 1."""
    _require_modulus(modulus, minimum=2)
    return Congruence(residue % modulus, modulus)


def mod_reduce(n: int, m: int) -> int:
    """Return the non-negative residue of ``n`` modulo ``m``."""
    _require_modulus(m, minimum=1)
    return n % m


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return ``base**exp mod m`` in ``[0, m)``."""
    _require_modulus(m, minimum=2)
    if exp < 0:
        raise InvalidInputError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, m)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def inv_mod(a: int, m: int) -> int | None:
    """Return the inverse of ``a`` modulo ``m``, or None when gcd(a, m) != 1."""
    _require_modulus(m, minimum=2)
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        return None
    return x % m


def gcd_euclid(a: int, b: int) -> int:
    """Greatest common divisor by repeated division; gcd(0, 0) == 0."""
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def lcm(a: int, b: int) -> int:
    """Least common multiple via ``|a*b| / gcd``; lcm(a, 0) == 0."""
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd_euclid(a, b)


def euclid_steps(a: int, b: int) -> list[EuclidStep]:
    """Division table of Euclid's algorithm; the last non-zero remainder is the gcd."""
    a, b = abs(a), abs(b)
    steps: list[EuclidStep] = []
    while b:
        q, r = divmod(a, b)
        steps.append(EuclidStep(a, b, q, r))
        a, b = b, r
    return steps


def sieve_eratosthenes(limit: int) -> list[int]:
    """Return every prime ``<= limit``."""
    if limit < 2:
        raise EmptyRangeError(f"sieve limit must be >= 2, got {limit}")
    marks = bytearray([1]) * (limit + 1)
    marks[0] = marks[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if marks[p]:
            marks[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [n for n, flag in enumerate(marks) if flag]


_SMALL_PRIMES: tuple[int, ...] = tuple(sieve_eratosthenes(_TRIAL_LIMIT))


def _miller_rabin_round(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _witnesses(n: int) -> Iterable[int]:
    if n < _MR_SMALL_BOUND:
        return _MR_SMALL_BASES
    # Every base below 2 ln(n)^2 (deterministic under GRH).
    bound = math.floor(2 * math.log(n) ** 2)
    return sieve_eratosthenes(min(bound, n - 2))


def is_prime(n: int) -> bool:
    """Primality by trial division, then Miller-Rabin.

    Exact below about 3.3e24, where a fixed set of thirteen prime bases is
    known to suffice. Above that every base below ``2 ln(n)^2`` is tried, which
    is deterministic only if the generalized Riemann hypothesis (GRH) holds.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_miller_rabin_round(n, base, d, s) for base in _witnesses(n))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    candidate = max(2, n + 1)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division up to the square root.

    The remaining cofactor is tested for primality after each divisor is
    stripped, so a large prime factor ends the search early.
    """
    if n < 2:
        raise InvalidInputError(f"factorize needs n >= 2, got {n}")
    factors: list[PrimePower] = []
    remaining = n
    divisor = 2
    while divisor * divisor <= remaining:
        if remaining % divisor == 0:
            exponent = 0
            while remaining % divisor == 0:
                remaining //= divisor
                exponent += 1
            factors.append(PrimePower(divisor, exponent))
            if is_prime(remaining):
                break
        divisor += 1 if divisor == 2 else 2
    if remaining > 1:
        factors.append(PrimePower(remaining, 1))
    return tuple(factors)


def _digit_sum_reduce(digits: str) -> int:
    total = sum(int(c) for c in digits)
    while total >= 10:
        total = sum(int(c) for c in str(total))
    return total


def _alternating_sum_reduce(digits: str) -> int:
    value = abs(sum(int(c) * (-1) ** i for i, c in enumerate(reversed(digits))))
    while value >= 11:
        value = abs(
            sum(int(c) * (-1) ** i for i, c in enumerate(reversed(str(value))))
        )
    return value


def digit_divisibility(n: int, d: int) -> bool:
    """Apply the elementary digit rule for divisor ``d`` to ``n``.

    Last digit for 2, 5 and 10; last two digits for 4; last three for 8;
    repeated digit sums for 3 and 9; alternating digit sums for 11.
    """
    if n < 0:
        raise InvalidInputError(f"digit criteria need n >= 0, got {n}")
    digits = str(n)
    match d:
        case 2:
            return digits[-1] in "02468"
        case 5:
            return digits[-1] in "05"
        case 10:
            return digits[-1] == "0"
        case 4:
            return int(digits[-2:]) in range(0, 100, 4)
        case 8:
            return int(digits[-3:]) in range(0, 1000, 8)
        case 3:
            return _digit_sum_reduce(digits) in (0, 3, 6, 9)
        case 9:
            return _digit_sum_reduce(digits) in (0, 9)
        case 11:
            return _alternating_sum_reduce(digits) == 0
        case _:
            raise UnsupportedCriterionError(
                f"no digit criterion for {d}; supported: {SUPPORTED_DIVISORS}"
            )


def crt_solve(congruences: Iterable[Congruence]) -> Congruence | None:
    """Merge simultaneous congruences into one class modulo the lcm.

    Moduli need not be coprime; returns None when the system is inconsistent.
    """
    items = list(congruences)
    if not items:
        raise InvalidInputError("crt_solve needs at least one congruence")
    for item in items:
        _require_modulus(item.modulus, minimum=2)
    residue, modulus = items[0].residue % items[0].modulus, items[0].modulus
    for item in items[1:]:
        g = gcd_euclid(modulus, item.modulus)
        delta = item.residue - residue
        if delta % g:
            return None
        reduced = item.modulus // g
        step = 0
        if reduced > 1:
            inverse = inv_mod(modulus // g, reduced)
            assert inverse is not None
            step = (delta // g) * inverse % reduced
        merged = modulus * reduced
        residue = (residue + modulus * step) % merged
        modulus = merged
    return Congruence(residue, modulus)


def cayley_table(m: int, op: TableOp) -> tuple[tuple[int, ...], ...]:
    """Composition table of Z_m under addition or multiplication."""
    _require_modulus(m, minimum=2)
    match op:
        case "add":
            return tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
        case "mul":
            return tuple(tuple((i * j) % m for j in range(m)) for i in range(m))
        case _:
            raise InvalidInputError(f"unknown table operation {op!r}")


def zm_units(m: int) -> list[int]:
    """Invertible classes of Z_m: rows of the product table that contain a 1."""
    table = cayley_table(m, "mul")
    return [i for i, row in enumerate(table) if 1 in row]


def _isbn_digits(text: str) -> str:
    return "".join(ch for ch in text.strip() if ch not in " -")


def isbn10_check_digit(first9: str) -> str:
    """Return the tenth ISBN symbol (``0``-``9`` or ``X``) for nine digits."""
    digits = _isbn_digits(first9)
    if len(digits) != 9 or not digits.isdigit():
        raise ParseError(f"expected 9 ISBN digits, got {first9!r}")
    check = sum(i * int(c) for i, c in enumerate(digits, start=1)) % 11
    return "X" if check == 10 else str(check)


def isbn10_validate(isbn: str) -> bool:
    """True when the weighted sum of the ten symbols vanishes modulo 11."""
    symbols = _isbn_digits(isbn).upper()
    if len(symbols) != 10 or not symbols[:9].isdigit():
        raise ParseError(f"expected 10 ISBN symbols, got {isbn!r}")
    last = symbols[9]
    if last != "X" and not last.isdigit():
        raise ParseError(f"invalid ISBN check symbol {last!r}")
    values = [int(c) for c in symbols[:9]] + [10 if last == "X" else int(last)]
    return sum(i * v for i, v in enumerate(values, start=1)) % 11 == 0


def trial_division_operations(digits: int) -> float:
    """Operation count ``0.3 * 2^(n/2) / ((n/2) ln 2)`` for n digits."""
    if digits < 1:
        raise InvalidInputError(f"digit count must be >= 1, got {digits}")
    half = digits / 2
    return 0.3 * 2**half / (half * math.log(2))


def trial_division_seconds(digits: int, ops_per_second: float = 1e11) -> float:
    """Seconds trial division needs for an n-digit number on the given machine."""
    if ops_per_second <= 0:
        raise InvalidInputError("ops_per_second must be positive")
    return trial_division_operations(digits) / ops_per_second


__all__ = [
    "SUPPORTED_DIVISORS",
    "Congruence",
    "EuclidStep",
    "Factorization",
    "PrimePower",
    "cayley_table",
    "congruence",
    "crt_solve",
    "digit_divisibility",
    "euclid_steps",
    "extended_gcd",
    "factorize",
    "gcd_euclid",
    "inv_mod",
    "is_prime",
    "isbn10_check_digit",
    "isbn10_validate",
    "lcm",
    "mod_pow",
    "mod_reduce",
    "next_prime",
    "sieve_eratosthenes",
    "trial_division_operations",
    "trial_division_seconds",
    "zm_units",
]

"""Didactic ciphers: per-character RSA, affine/Caesar with frequency cracking, Hill.

Letters map ``a=0 .. z=25``. Plaintext is returned lowercase and ciphertext
uppercase; either case is accepted on input.
"""

import math
import string
from collections import Counter
from collections.abc import Sequence
from typing import NamedTuple

from mathbook.domain.errors import (
    BadExponentError,
    BadModulusError,
    CharOutOfRangeError,
    DegenerateError,
    InvalidInputError,
    LengthMismatchError,
    NonAlphabeticError,
    NonInvertibleAError,
    NonInvertibleKeyError,
    NonSquareError,
    NotPrimeError,
)
from mathbook.domain.matrix import Matrix, mat_inv_mod, mat_mod, matmul
from mathbook.domain.numtheory import inv_mod, is_prime

ALPHABET_SIZE = 26
BYTE_LIMIT = 256
PRINTABLE_LOW = 32
PRINTABLE_HIGH = 126
HILL_PAD = "x"
AFFINE_UNITS = tuple(a for a in range(ALPHABET_SIZE) if math.gcd(a, ALPHABET_SIZE) == 1)


class RsaKeypair(NamedTuple):
    """Public ``(n, e)`` and private ``(n, d)`` halves plus the primes."""

    n: int
    e: int
    d: int
    p: int
    q: int

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1)


class AffineKey(NamedTuple):
    """``x -> (a x + b) mod 26`` with ``gcd(a, 26) = 1``."""

    a: int
    b: int


def rsa_keypair(p: int, q: int, e: int) -> RsaKeypair:
    """Derive the private exponent ``d = e^-1 mod (p-1)(q-1)``."""
    for value in (p, q):
        if not is_prime(value):
            raise NotPrimeError(f"{value} is not prime")
    if p == q:
        raise InvalidInputError("p and q must be distinct primes")
    phi = (p - 1) * (q - 1)
    d = inv_mod(e, phi) if e > 1 else None
    if d is None:
        raise BadExponentError(f"e={e} is not invertible modulo (p-1)(q-1)={phi}")
    return RsaKeypair(p * q, e, d, p, q)


def _check_printable_modulus(n: int) -> None:
    if n <= PRINTABLE_HIGH:
        raise BadModulusError(
            f"printable mode needs N > {PRINTABLE_HIGH}, got N={n}"
        )


def _is_printable(code: int) -> bool:
    return PRINTABLE_LOW <= code <= PRINTABLE_HIGH


def _walk_printable(value: int, exponent: int, n: int) -> int:
    """Apply ``x -> x^exponent mod n`` until the result is printable.

    With a valid key the map permutes ``[0, n)``, so walking the cycle from a
    printable code returns a printable code and the inverse walk undoes it.
    """
    x = pow(value, exponent, n)
    for _ in range(n):
        if _is_printable(x):
            return x
        x = pow(x, exponent, n)
    raise BadExponentError(f"x^{exponent} mod {n} does not permute the residues")


def rsa_encrypt_text(
    text: str, n: int, e: int, *, printable: bool = False
) -> list[int]:
    """Encrypt one character at a time, ``c = ord(ch)^e mod n``.

    Codes are plain ASCII, so ``"Hola"`` (72 111 108 97) gives ``[63, 89, 114,
    15]`` under ``(143, 17)``. With ``printable`` both the text and every block
    stay in ``[32, 126]``: a block outside that range is encrypted again until it
    lands inside.
    """
    if printable:
        _check_printable_modulus(n)
    blocks: list[int] = []
    for ch in text:
        code = ord(ch)
        if printable and not _is_printable(code):
            raise CharOutOfRangeError(f"{ch!r} is not printable ASCII")
        if code >= min(n, BYTE_LIMIT):
            raise CharOutOfRangeError(f"code {code} of {ch!r} does not fit below N={n}")
        blocks.append(_walk_printable(code, e, n) if printable else pow(code, e, n))
    return blocks


def rsa_decrypt_text(
    blocks: Sequence[int], n: int, d: int, *, printable: bool = False
) -> str:
    """Invert :func:`rsa_encrypt_text` with the private exponent."""
    if printable:
        _check_printable_modulus(n)
    chars: list[str] = []
    for block in blocks:
        if not 0 <= block < n:
            raise InvalidInputError(f"block {block} is outside [0, {n})")
        if printable:
            if not _is_printable(block):
                raise CharOutOfRangeError(f"block {block} is not printable ASCII")
            code = _walk_printable(block, d, n)
        else:
            code = pow(block, d, n)
        if code >= BYTE_LIMIT:
            raise CharOutOfRangeError(f"block {block} decrypts to code {code}")
        chars.append(chr(code))
    return "".join(chars)


def _letter_values(text: str) -> list[int]:
    values: list[int] = []
    for ch in text:
        if ch not in string.ascii_letters:
            raise NonAlphabeticError(f"{ch!r} is not a letter a-z")
        values.append(ord(ch.lower()) - ord("a"))
    return values


def _upper(values: Sequence[int]) -> str:
    return "".join(string.ascii_uppercase[v % ALPHABET_SIZE] for v in values)


def _lower(values: Sequence[int]) -> str:
    return "".join(string.ascii_lowercase[v % ALPHABET_SIZE] for v in values)


def affine_key(a: int, b: int) -> AffineKey:
    if math.gcd(a, ALPHABET_SIZE) != 1:
        raise NonInvertibleAError(f"a={a} shares a factor with 26")
    return AffineKey(a % ALPHABET_SIZE, b % ALPHABET_SIZE)


def affine_encrypt(text: str, key: AffineKey) -> str:
    k = affine_key(*key)
    return _upper([k.a * x + k.b for x in _letter_values(text)])


def affine_decrypt(text: str, key: AffineKey) -> str:
    k = affine_key(*key)
    a_inverse = pow(k.a, -1, ALPHABET_SIZE)
    return _lower([a_inverse * (y - k.b) for y in _letter_values(text)])


def caesar_encrypt(text: str, shift: int = 3) -> str:
    """Shift every letter forward; the classical cipher uses 3."""
    return affine_encrypt(text, AffineKey(1, shift))


def caesar_decrypt(text: str, shift: int = 3) -> str:
    return affine_decrypt(text, AffineKey(1, shift))


def letter_frequencies(text: str) -> list[tuple[str, int]]:
    """Letter counts, most frequent first, ties in alphabetical order."""
    counts = Counter(_upper(_letter_values(text)))
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def _solve_pair(
    plain: tuple[int, int], cipher: tuple[int, int]
) -> list[AffineKey]:
    (x1, x2), (y1, y2) = plain, cipher
    return [
        AffineKey(a, (y1 - a * x1) % ALPHABET_SIZE)
        for a in AFFINE_UNITS
        if (a * (x1 - x2) - (y1 - y2)) % ALPHABET_SIZE == 0
    ]


def _cipher_pairs(freqs: list[tuple[str, int]]) -> list[tuple[str, str]]:
    top_count = freqs[0][1]
    top = [letter for letter, count in freqs if count == top_count]
    if len(top) > 1:
        return [(y1, y2) for y1 in top for y2 in top if y1 != y2]
    second_count = next(count for _, count in freqs if count < top_count)
    second = [letter for letter, count in freqs if count == second_count]
    return [(top[0], y2) for y2 in second]


def affine_crack(
    ciphertext: str, assumed_plain: tuple[str, str] = ("e", "a")
) -> list[AffineKey]:
    """Candidate keys mapping the two most frequent plaintext letters.

    The most frequent cipher letter is paired with ``assumed_plain[0]`` and the
    runner-up with ``assumed_plain[1]``. Frequency ties widen the search to
    every ordered pair in the tied group, so several keys may come back.
    """
    freqs = letter_frequencies(ciphertext)
    if len(freqs) < 2:
        raise DegenerateError("need at least two distinct cipher letters")
    plain = tuple(_letter_values("".join(assumed_plain)))
    if len(plain) != 2 or plain[0] == plain[1]:
        raise InvalidInputError("assumed plaintext must be two distinct letters")
    candidates: list[AffineKey] = []
    for y1, y2 in _cipher_pairs(freqs):
        cipher = tuple(_letter_values(y1 + y2))
        for key in _solve_pair((plain[0], plain[1]), (cipher[0], cipher[1])):
            if key not in candidates:
                candidates.append(key)
    return candidates


def _hill_key(key: Matrix) -> tuple[Matrix, Matrix]:
    if not key.is_square:
        raise NonSquareError(f"Hill key must be square, got {key.shape}")
    inverse = mat_inv_mod(key, ALPHABET_SIZE)
    if inverse is None:
        raise NonInvertibleKeyError("key determinant is not invertible modulo 26")
    return key, inverse


def _hill_apply(values: list[int], key: Matrix) -> list[int]:
    size = key.n_rows
    out: list[int] = []
    for start in range(0, len(values), size):
        block = Matrix(tuple((v,) for v in values[start : start + size]))
        out.extend(int(x) for x in mat_mod(matmul(key, block), ALPHABET_SIZE).column(0))
    return out


def hill_encrypt(text: str, key: Matrix) -> str:
    """Encrypt blocks of ``k`` letters as ``K v mod 26``, padding with ``x``."""
    k, _ = _hill_key(key)
    values = _letter_values(text)
    remainder = len(values) % k.n_rows
    if remainder:
        values += _letter_values(HILL_PAD * (k.n_rows - remainder))
    return _upper(_hill_apply(values, k))


def hill_decrypt(text: str, key: Matrix) -> str:
    """Apply ``K^-1 mod 26`` blockwise; padding is left in place."""
    k, inverse = _hill_key(key)
    values = _letter_values(text)
    if len(values) % k.n_rows:
        raise LengthMismatchError(
            f"ciphertext length {len(values)} is not a multiple of {k.n_rows}"
        )
    return _lower(_hill_apply(values, inverse))


__all__ = [
    "AFFINE_UNITS",
    "AffineKey",
    "RsaKeypair",
    "affine_crack",
    "affine_decrypt",
    "affine_encrypt",
    "affine_key",
    "caesar_decrypt",
    "caesar_encrypt",
    "hill_decrypt",
    "hill_encrypt",
    "letter_frequencies",
    "rsa_decrypt_text",
    "rsa_encrypt_text",
    "rsa_keypair",
]

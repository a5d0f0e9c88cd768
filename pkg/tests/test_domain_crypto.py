"""Tests for the didactic ciphers."""

from __future__ import annotations

import math
import random
import string

import pytest

from mathbook.domain.crypto import (
    AFFINE_UNITS,
    AffineKey,
    affine_crack,
    affine_decrypt,
    affine_encrypt,
    affine_key,
    caesar_decrypt,
    caesar_encrypt,
    hill_decrypt,
    hill_encrypt,
    letter_frequencies,
    rsa_decrypt_text,
    rsa_encrypt_text,
    rsa_keypair,
)
from mathbook.domain.errors import (
    BadExponentError,
    BadModulusError,
    CharOutOfRangeError,
    DegenerateError,
    NonAlphabeticError,
    NonInvertibleAError,
    NonInvertibleKeyError,
    NotPrimeError,
)
from mathbook.domain.literals import parse_matrix
from mathbook.domain.matrix import Matrix

PLAINTEXT = "notenemosreservadeagua"
CIPHERTEXT = "QRWHQHPRVUHVHUYDGHDJXD"
PRINTABLE = "".join(chr(code) for code in range(32, 127))


def _random_letters(rng: random.Random, length: int) -> str:
    return "".join(rng.choice(string.ascii_lowercase) for _ in range(length))


def test_rsa_keypair_worked_example() -> None:
    key = rsa_keypair(11, 13, 17)
    assert (key.n, key.e, key.d) == (143, 17, 113)
    assert key.e * key.d % key.phi == 1
    assert rsa_keypair(3, 5, 3).d == 3


def test_rsa_keypair_validation() -> None:
    with pytest.raises(NotPrimeError):
        rsa_keypair(12, 13, 17)
    with pytest.raises(BadExponentError):
        rsa_keypair(11, 13, 5)
    with pytest.raises(BadExponentError):
        rsa_keypair(11, 13, 4)


def test_rsa_blocks_are_ascii_codes_to_the_e() -> None:
    # 'H' is 72: the worked example encodes 072 111 108 097
    assert rsa_encrypt_text("Hola", 143, 17) == [63, 89, 114, 15]
    assert rsa_decrypt_text([63, 89, 114, 15], 143, 113) == "Hola"
    assert rsa_encrypt_text("hola", 143, 17) == [91, 89, 114, 15]
    assert rsa_encrypt_text("", 143, 17) == []


def test_rsa_round_trip_over_every_residue() -> None:
    text = "".join(chr(m) for m in range(143))
    blocks = rsa_encrypt_text(text, 143, 17)
    assert blocks == [pow(m, 17, 143) for m in range(143)]
    assert sorted(blocks) == list(range(143))
    assert rsa_decrypt_text(blocks, 143, 113) == text


def test_rsa_printable_blocks_stay_printable() -> None:
    blocks = rsa_encrypt_text(PRINTABLE, 143, 17, printable=True)
    assert all(32 <= block <= 126 for block in blocks)
    assert len(set(blocks)) == len(PRINTABLE)
    assert rsa_decrypt_text(blocks, 143, 113, printable=True) == PRINTABLE


def test_rsa_printable_walks_out_of_control_codes() -> None:
    # plain encryption of 'a' gives 15, a control code
    assert rsa_encrypt_text("a", 143, 17) == [15]
    block = rsa_encrypt_text("a", 143, 17, printable=True)[0]
    assert 32 <= block <= 126
    assert rsa_decrypt_text([block], 143, 113, printable=True) == "a"


def test_rsa_printable_mode_rejections() -> None:
    with pytest.raises(BadModulusError):
        rsa_encrypt_text("hi", 119, 5, printable=True)
    with pytest.raises(CharOutOfRangeError):
        rsa_encrypt_text("a\tb", 143, 17, printable=True)
    with pytest.raises(CharOutOfRangeError):
        rsa_decrypt_text([15], 143, 113, printable=True)
    with pytest.raises(CharOutOfRangeError):
        rsa_encrypt_text("ñ", 143, 17)


def test_affine_worked_example() -> None:
    key = affine_key(1, 3)
    assert affine_encrypt(PLAINTEXT, key) == CIPHERTEXT
    assert affine_decrypt(CIPHERTEXT, key) == PLAINTEXT
    assert affine_encrypt("e", key) == "H"
    assert affine_encrypt("abc", affine_key(1, 0)) == "ABC"
    with pytest.raises(NonInvertibleAError):
        affine_key(13, 1)


def test_affine_round_trip_for_every_key() -> None:
    rng = random.Random(11)
    for a in AFFINE_UNITS:
        for b in range(26):
            key = affine_key(a, b)
            message = _random_letters(rng, rng.randint(1, 64))
            assert affine_decrypt(affine_encrypt(message, key), key) == message


def test_caesar() -> None:
    assert caesar_encrypt("abcxyz") == "DEFABC"
    assert caesar_decrypt("DEFABC") == "abcxyz"
    with pytest.raises(NonAlphabeticError):
        caesar_encrypt("hello world")


def test_letter_frequencies_and_crack() -> None:
    freqs = letter_frequencies(CIPHERTEXT)
    assert freqs[:2] == [("H", 5), ("D", 3)]
    assert letter_frequencies("AAB") == [("A", 2), ("B", 1)]
    assert letter_frequencies("") == []
    keys = affine_crack(CIPHERTEXT)
    assert keys[0] == AffineKey(1, 3)
    assert affine_decrypt(CIPHERTEXT, keys[0]) == PLAINTEXT


def test_frequencies_ignore_letter_order() -> None:
    rng = random.Random(5)
    message = _random_letters(rng, 40)
    shuffled = "".join(rng.sample(message, len(message)))
    assert letter_frequencies(message) == letter_frequencies(shuffled)
    assert sum(count for _, count in letter_frequencies(message)) == 40


def test_affine_crack_recovers_known_key() -> None:
    key = affine_key(3, 7)
    assert affine_crack(affine_encrypt("eaeae", key)) == [key]
    assert key in affine_crack(affine_encrypt("eaeaea", key))


def test_affine_crack_needs_two_letters() -> None:
    with pytest.raises(DegenerateError):
        affine_crack("QQ")


def test_affine_crack_when_e_and_a_lead() -> None:
    rng = random.Random(23)
    others = [ch for ch in string.ascii_lowercase if ch not in "ea"]
    for _ in range(200):
        a_count = rng.randint(2, 6)
        letters = ["e"] * (a_count + rng.randint(1, 3)) + ["a"] * a_count
        for ch in rng.sample(others, rng.randint(0, 8)):
            letters += [ch] * rng.randint(0, a_count - 1)
        rng.shuffle(letters)
        key = affine_key(rng.choice(AFFINE_UNITS), rng.randrange(26))
        assert key in affine_crack(affine_encrypt("".join(letters), key))


def test_hill_worked_example() -> None:
    key = parse_matrix("3 2; 5 3")
    assert hill_encrypt("hola", key) == "XZHD"
    assert hill_decrypt("XZHD", key) == "hola"


def test_hill_pads_last_block() -> None:
    key = parse_matrix("3 2; 5 3")
    ciphertext = hill_encrypt("abc", key)
    assert len(ciphertext) == 4
    assert hill_decrypt(ciphertext, key) == "abcx"


def test_hill_rejects_singular_key() -> None:
    with pytest.raises(NonInvertibleKeyError):
        hill_encrypt("hola", parse_matrix("2 0; 0 1"))


def test_hill_three_by_three_round_trip() -> None:
    key = parse_matrix("1 0 0; 1 6 1; 6 3 6")
    ciphertext = hill_encrypt("luzbel", key)
    assert len(ciphertext) == 6
    assert ciphertext.isupper()
    assert hill_decrypt(ciphertext, key) == "luzbel"


def test_hill_round_trip_for_random_keys() -> None:
    rng = random.Random(31)
    keys = 0
    while keys < 100:
        a, b, c, d = (rng.randrange(26) for _ in range(4))
        if math.gcd(a * d - b * c, 26) != 1:
            continue
        keys += 1
        key = Matrix(((a, b), (c, d)))
        message = _random_letters(rng, rng.randint(2, 20))
        padded = message + "x" * (len(message) % 2)
        assert hill_decrypt(hill_encrypt(message, key), key) == padded

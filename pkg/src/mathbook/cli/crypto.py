"""`mathbook crypto`: RSA, affine, Caesar and Hill ciphers."""

from typing import Any

import typer

from mathbook.cli._common import (
    emit,
    handle_errors,
    json_option,
    read_message_arg,
    read_text_arg,
)
from mathbook.domain import crypto
from mathbook.domain.errors import InvalidInputError
from mathbook.domain.literals import parse_int_list, parse_matrix

app = typer.Typer(help="Classical and public-key ciphers.", no_args_is_help=True)

TEXT_HELP = "Message text, a file path, or - for stdin."
KEY_HELP = "Hill key as matrix text ('3 2; 5 3') or a file path."


def _key_option() -> Any:
    return typer.Option(..., "--key", "-k", help=KEY_HELP)


@app.command("rsa-keygen")
def rsa_keygen_command(
    ctx: typer.Context,
    p: int = typer.Argument(..., help="First prime."),
    q: int = typer.Argument(..., help="Second, distinct prime."),
    e: int = typer.Argument(..., help="Public exponent, coprime to (p-1)(q-1)."),
    as_json: bool = json_option(),
) -> None:
    """Build an RSA key pair from two primes and a public exponent."""
    with handle_errors():
        emit(ctx, crypto.rsa_keypair(p, q, e), as_json)


@app.command("rsa-enc")
def rsa_enc_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    n: int = typer.Option(..., "--n", help="Modulus N = p q."),
    e: int = typer.Option(..., "--e", help="Public exponent."),
    printable: bool = typer.Option(
        False, "--printable", help="Restrict to printable ASCII (needs N > 126)."
    ),
    as_json: bool = json_option(),
) -> None:
    """Encrypt one character per block, c = m^e mod N."""
    with handle_errors():
        blocks = crypto.rsa_encrypt_text(
            read_message_arg(text), n, e, printable=printable
        )
        emit(ctx, blocks, as_json, text=" ".join(map(str, blocks)))


@app.command("rsa-dec")
def rsa_dec_command(
    ctx: typer.Context,
    blocks: str = typer.Argument(..., help="Cipher blocks, e.g. '63 89 114 15'."),
    n: int = typer.Option(..., "--n", help="Modulus N = p q."),
    d: int = typer.Option(..., "--d", help="Private exponent."),
    printable: bool = typer.Option(
        False, "--printable", help="Require printable ASCII output (needs N > 126)."
    ),
    as_json: bool = json_option(),
) -> None:
    """Decrypt blocks back to text, m = c^d mod N."""
    with handle_errors():
        values = parse_int_list(read_text_arg(blocks))
        emit(ctx, crypto.rsa_decrypt_text(values, n, d, printable=printable), as_json)


@app.command("affine-enc")
def affine_enc_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    a: int = typer.Option(..., "--a", help="Multiplier, coprime to 26."),
    b: int = typer.Option(..., "--b", help="Shift."),
    as_json: bool = json_option(),
) -> None:
    """Encrypt letters as (a x + b) mod 26; output is uppercase."""
    with handle_errors():
        key = crypto.affine_key(a, b)
        emit(ctx, crypto.affine_encrypt(read_message_arg(text), key), as_json)


@app.command("affine-dec")
def affine_dec_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    a: int = typer.Option(..., "--a", help="Multiplier, coprime to 26."),
    b: int = typer.Option(..., "--b", help="Shift."),
    as_json: bool = json_option(),
) -> None:
    """Invert the affine cipher; output is lowercase."""
    with handle_errors():
        key = crypto.affine_key(a, b)
        emit(ctx, crypto.affine_decrypt(read_message_arg(text), key), as_json)


@app.command("affine-crack")
def affine_crack_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    assume: str = typer.Option(
        "ea",
        "--assume",
        help="The two most frequent plaintext letters, most frequent first.",
    ),
    as_json: bool = json_option(),
) -> None:
    """Candidate affine keys from the two most frequent cipher letters."""
    with handle_errors():
        if len(assume) != 2:
            raise InvalidInputError("--assume takes exactly two letters")
        ciphertext = read_message_arg(text)
        keys = crypto.affine_crack(ciphertext, (assume[0], assume[1]))
        candidates = [
            {"a": k.a, "b": k.b, "plaintext": crypto.affine_decrypt(ciphertext, k)}
            for k in keys
        ]
        lines = [f"a={c['a']} b={c['b']} {c['plaintext']}" for c in candidates]
        emit(ctx, candidates, as_json, text="\n".join(lines))


@app.command("caesar-enc")
def caesar_enc_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    shift: int = typer.Option(3, "--shift", help="Letters to shift forward."),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, crypto.caesar_encrypt(read_message_arg(text), shift), as_json)


@app.command("caesar-dec")
def caesar_dec_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    shift: int = typer.Option(3, "--shift", help="Letters the message was shifted."),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, crypto.caesar_decrypt(read_message_arg(text), shift), as_json)


@app.command("freq")
def freq_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    as_json: bool = json_option(),
) -> None:
    """Letter counts, most frequent first."""
    with handle_errors():
        freqs = crypto.letter_frequencies(read_message_arg(text))
        emit(
            ctx,
            [{"letter": letter, "count": count} for letter, count in freqs],
            as_json,
            text="\n".join(f"{letter} {count}" for letter, count in freqs),
        )


@app.command("hill-enc")
def hill_enc_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    key: str = _key_option(),
    as_json: bool = json_option(),
) -> None:
    """Encrypt blocks as K v mod 26, padding the last block with 'x'."""
    with handle_errors():
        matrix = parse_matrix(read_text_arg(key))
        emit(ctx, crypto.hill_encrypt(read_message_arg(text), matrix), as_json)


@app.command("hill-dec")
def hill_dec_command(
    ctx: typer.Context,
    text: str = typer.Argument(..., help=TEXT_HELP),
    key: str = _key_option(),
    as_json: bool = json_option(),
) -> None:
    """Decrypt with the inverse key modulo 26."""
    with handle_errors():
        matrix = parse_matrix(read_text_arg(key))
        emit(ctx, crypto.hill_decrypt(read_message_arg(text), matrix), as_json)


__all__ = ["app"]

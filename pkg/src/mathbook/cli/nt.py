"""`mathbook nt`: congruences, primes, gcd/lcm, CRT, Z_m tables and ISBN-10."""

from typing import Literal

import typer

from mathbook.cli._common import config_of, emit, handle_errors, json_option
from mathbook.domain import numtheory
from mathbook.domain.errors import (
    InconsistentSystemError,
    NotInvertibleError,
    ParseError,
)
from mathbook.domain.literals import parse_int
from mathbook.domain.matrix import matrix
from mathbook.domain.numtheory import Congruence, Factorization

app = typer.Typer(help="Number theory and modular arithmetic.", no_args_is_help=True)


def _format_factorization(factors: Factorization) -> str:
    if not factors:
        return "1"
    return " * ".join(
        str(f.prime) if f.exponent == 1 else f"{f.prime}^{f.exponent}" for f in factors
    )


def _format_congruence(c: Congruence) -> str:
    return f"{c.residue} (mod {c.modulus})"


def _parse_congruence(text: str) -> Congruence:
    residue, sep, modulus = text.partition(":")
    if not sep:
        raise ParseError(f"congruence {text!r} is not written r:m")
    return numtheory.congruence(parse_int(residue), parse_int(modulus))


@app.command("mod")
def mod_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Integer to reduce."),
    m: int = typer.Argument(..., help="Modulus (>= 1)."),
    as_json: bool = json_option(),
) -> None:
    """Non-negative residue of N modulo M."""
    with handle_errors():
        emit(ctx, numtheory.mod_reduce(n, m), as_json)


@app.command("powmod")
def powmod_command(
    ctx: typer.Context,
    base: int = typer.Argument(...),
    exp: int = typer.Argument(..., help="Exponent (>= 0)."),
    m: int = typer.Argument(..., help="Modulus (>= 2)."),
    as_json: bool = json_option(),
) -> None:
    """BASE^EXP mod M by repeated squaring."""
    with handle_errors():
        emit(ctx, numtheory.mod_pow(base, exp, m), as_json)


@app.command("invmod")
def invmod_command(
    ctx: typer.Context,
    a: int = typer.Argument(...),
    m: int = typer.Argument(..., help="Modulus (>= 2)."),
    as_json: bool = json_option(),
) -> None:
    """Multiplicative inverse of A modulo M."""
    with handle_errors():
        inverse = numtheory.inv_mod(a, m)
        if inverse is None:
            raise NotInvertibleError(f"{a} has no inverse modulo {m}")
        emit(ctx, inverse, as_json)


@app.command("gcd")
def gcd_command(
    ctx: typer.Context,
    a: int = typer.Argument(...),
    b: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Greatest common divisor by Euclid's algorithm."""
    with handle_errors():
        emit(ctx, numtheory.gcd_euclid(a, b), as_json)


@app.command("lcm")
def lcm_command(
    ctx: typer.Context,
    a: int = typer.Argument(...),
    b: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Least common multiple."""
    with handle_errors():
        emit(ctx, numtheory.lcm(a, b), as_json)


@app.command("euclid")
def euclid_command(
    ctx: typer.Context,
    a: int = typer.Argument(...),
    b: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Division table of Euclid's algorithm; the last divisor is the gcd."""
    with handle_errors():
        steps = numtheory.euclid_steps(a, b)
        text = "\n".join(
            f"{s.dividend} = {s.divisor} * {s.quotient} + {s.remainder}" for s in steps
        )
        emit(ctx, steps, as_json, text=text)


@app.command("sieve")
def sieve_command(
    ctx: typer.Context,
    limit: int = typer.Argument(..., help="Upper bound (>= 2)."),
    as_json: bool = json_option(),
) -> None:
    """Primes up to LIMIT by the sieve of Eratosthenes."""
    with handle_errors():
        primes = numtheory.sieve_eratosthenes(limit)
        emit(ctx, primes, as_json, text=" ".join(map(str, primes)))


@app.command("factor")
def factor_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Integer >= 1."),
    as_json: bool = json_option(),
) -> None:
    """Prime factorization, ascending primes."""
    with handle_errors():
        factors = numtheory.factorize(n)
        emit(ctx, factors, as_json, text=_format_factorization(factors))


@app.command("isprime")
def isprime_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Primality test (deterministic Miller-Rabin)."""
    with handle_errors():
        emit(ctx, numtheory.is_prime(n), as_json)


@app.command("nextprime")
def nextprime_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Smallest prime strictly greater than N."""
    with handle_errors():
        emit(ctx, numtheory.next_prime(n), as_json)


@app.command("divisible")
def divisible_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Integer >= 0."),
    d: int = typer.Argument(..., help="One of 2, 3, 4, 5, 8, 9, 10, 11."),
    as_json: bool = json_option(),
) -> None:
    """Decide D | N with the elementary digit criterion."""
    with handle_errors():
        emit(ctx, numtheory.digit_divisibility(n, d), as_json)


@app.command("crt")
def crt_command(
    ctx: typer.Context,
    congruences: list[str] = typer.Argument(..., help="Congruences written r:m."),
    as_json: bool = json_option(),
) -> None:
    """Solve simultaneous congruences x = r (mod m)."""
    with handle_errors():
        merged = numtheory.crt_solve(_parse_congruence(c) for c in congruences)
        if merged is None:
            raise InconsistentSystemError("the congruences have no common solution")
        emit(ctx, merged, as_json, text=_format_congruence(merged))


@app.command("table")
def table_command(
    ctx: typer.Context,
    m: int = typer.Argument(..., help="Modulus (>= 2)."),
    op: str = typer.Option("mul", "--op", help="add or mul."),
    as_json: bool = json_option(),
) -> None:
    """Cayley table of Z_M under addition or multiplication."""
    with handle_errors():
        if op not in ("add", "mul"):
            raise typer.BadParameter(f"--op must be add or mul, got {op!r}")
        kind: Literal["add", "mul"] = "add" if op == "add" else "mul"
        emit(ctx, matrix(numtheory.cayley_table(m, kind)), as_json)


@app.command("units")
def units_command(
    ctx: typer.Context,
    m: int = typer.Argument(..., help="Modulus (>= 2)."),
    as_json: bool = json_option(),
) -> None:
    """Invertible classes of Z_M."""
    with handle_errors():
        units = numtheory.zm_units(m)
        emit(ctx, units, as_json, text=" ".join(map(str, units)))


@app.command("isbn")
def isbn_command(
    ctx: typer.Context,
    isbn: str = typer.Argument(..., help="9 digits (check digit) or 10 symbols."),
    as_json: bool = json_option(),
) -> None:
    """ISBN-10 check digit for 9 digits, or validation of a full ISBN-10."""
    with handle_errors():
        symbols = "".join(ch for ch in isbn if ch not in " -")
        if len(symbols) == 9:
            emit(ctx, numtheory.isbn10_check_digit(symbols), as_json)
        else:
            emit(ctx, numtheory.isbn10_validate(symbols), as_json)


@app.command("factortime")
def factortime_command(
    ctx: typer.Context,
    digits: int = typer.Argument(..., help="Decimal digits of the number."),
    ops_per_second: float | None = typer.Option(
        None,
        "--ops-per-second",
        help="Machine speed; defaults to MATHBOOK_OPS_PER_SECOND.",
    ),
    as_json: bool = json_option(),
) -> None:
    """Seconds trial division needs to factor a DIGITS-digit number."""
    with handle_errors():
        speed = ops_per_second
        if speed is None:
            speed = config_of(ctx).ops_per_second
        emit(ctx, numtheory.trial_division_seconds(digits, speed), as_json)


__all__ = ["app"]

"""`mathbook comb`: counting and the binomial distribution."""

import typer

from mathbook.cli._common import emit, handle_errors, json_option
from mathbook.domain import combinatorics
from mathbook.domain.literals import parse_scalar

app = typer.Typer(
    help="Counting formulas and binomial probabilities.", no_args_is_help=True
)


@app.command("fact")
def fact_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="n >= 0."),
    as_json: bool = json_option(),
) -> None:
    """n!"""
    with handle_errors():
        emit(ctx, combinatorics.factorial(n), as_json)


@app.command("binom")
def binom_command(
    ctx: typer.Context,
    p: int = typer.Argument(...),
    q: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Binomial coefficient C(P, Q); 0 when Q > P."""
    with handle_errors():
        emit(ctx, combinatorics.binomial(p, q), as_json)


@app.command("perm")
def perm_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    k: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Ordered selections of K out of N without repetition."""
    with handle_errors():
        emit(ctx, combinatorics.perm(n, k), as_json)


@app.command("permrep")
def permrep_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    k: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Ordered selections of K out of N with repetition, N^K."""
    with handle_errors():
        emit(ctx, combinatorics.perm_rep(n, k), as_json)


@app.command("comb")
def comb_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    k: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Unordered selections of K out of N without repetition."""
    with handle_errors():
        emit(ctx, combinatorics.comb(n, k), as_json)


@app.command("combrep")
def combrep_command(
    ctx: typer.Context,
    n: int = typer.Argument(...),
    k: int = typer.Argument(...),
    as_json: bool = json_option(),
) -> None:
    """Unordered selections of K out of N with repetition."""
    with handle_errors():
        emit(ctx, combinatorics.comb_rep(n, k), as_json)


@app.command("pascal")
def pascal_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Row index, n >= 0."),
    as_json: bool = json_option(),
) -> None:
    """Row N of Pascal's triangle."""
    with handle_errors():
        row = combinatorics.pascal_row(n)
        emit(ctx, row, as_json, text=" ".join(map(str, row)))


@app.command("pmf")
def pmf_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Number of trials."),
    p: str = typer.Argument(..., help="Success probability, e.g. 0.5 or 1/2."),
    x: int = typer.Argument(..., help="Number of successes."),
    exact: bool = typer.Option(False, "--exact", help="Print the exact rational."),
    as_json: bool = json_option(),
) -> None:
    """P(X = x) for a binomial B(n, p)."""
    with handle_errors():
        spec = combinatorics.bernoulli_spec(n, parse_scalar(p), x)
        if exact:
            emit(ctx, combinatorics.binomial_pmf_exact(spec), as_json)
        else:
            emit(ctx, combinatorics.binomial_pmf(spec), as_json)


@app.command("dice")
def dice_command(
    ctx: typer.Context,
    total: int = typer.Argument(..., help="Target sum."),
    dice: int = typer.Option(2, "--dice", help="Number of dice."),
    faces: int = typer.Option(6, "--faces", help="Faces per die."),
    as_json: bool = json_option(),
) -> None:
    """Probability that fair dice add up to TOTAL."""
    with handle_errors():
        emit(ctx, combinatorics.dice_sum_probability(total, dice, faces), as_json)


__all__ = ["app"]

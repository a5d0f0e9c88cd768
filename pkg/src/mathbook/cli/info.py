"""`mathbook info`: information content and entropy."""

import typer

from mathbook.cli._common import emit, handle_errors, json_option, read_text_arg
from mathbook.domain import information
from mathbook.domain.errors import InvalidInputError, ParseError
from mathbook.domain.information import Distribution
from mathbook.domain.literals import parse_int_list, parse_scalar, parse_vector

app = typer.Typer(help="Information and Shannon entropy.", no_args_is_help=True)


def _parse_source(text: str) -> tuple[float, Distribution]:
    weight, sep, probs = text.partition("=")
    if not sep:
        raise ParseError(f"source {text!r} is not written W=p1,p2,...")
    return float(parse_scalar(weight)), information.distribution(parse_vector(probs))


@app.command("entropy")
def entropy_command(
    ctx: typer.Context,
    probs: str | None = typer.Option(
        None, "--probs", help="Probabilities, e.g. '1/2,1/4,1/4'."
    ),
    counts: str | None = typer.Option(
        None, "--counts", help="Positive counts, e.g. '2,1,1'."
    ),
    as_json: bool = json_option(),
) -> None:
    """Shannon entropy in bits of a distribution or of raw counts."""
    with handle_errors():
        if (probs is None) == (counts is None):
            raise InvalidInputError("give exactly one of --probs or --counts")
        if probs is not None:
            value = information.shannon_entropy(
                information.distribution(parse_vector(probs))
            )
        else:
            value = information.entropy_from_counts(parse_int_list(counts or ""))
        emit(ctx, value, as_json)


@app.command("uniform")
def uniform_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Number of equiprobable messages."),
    as_json: bool = json_option(),
) -> None:
    """log2 N bits."""
    with handle_errors():
        emit(ctx, information.uniform_information(n), as_json)


@app.command("selfinfo")
def selfinfo_command(
    ctx: typer.Context,
    p: str = typer.Argument(..., help="Message probability in (0, 1]."),
    as_json: bool = json_option(),
) -> None:
    """Bits carried by one message of probability P."""
    with handle_errors():
        emit(ctx, information.self_information(parse_scalar(p)), as_json)


@app.command("dna")
def dna_command(
    ctx: typer.Context,
    sequence: str = typer.Argument(..., help="Bases, a FASTA file, or - for stdin."),
    show_counts: bool = typer.Option(
        False, "--counts", help="Print the codon counts instead of the entropy."
    ),
    as_json: bool = json_option(),
) -> None:
    """Entropy of the overlapping codons of a DNA sequence."""
    with handle_errors():
        text = read_text_arg(sequence)
        if show_counts:
            counts = information.sliding_codons(text)
            emit(
                ctx,
                dict(counts.counts),
                as_json,
                text="\n".join(f"{codon} {n}" for codon, n in counts.counts),
            )
        else:
            emit(ctx, information.sequence_entropy(text), as_json)


@app.command("mix")
def mix_command(
    ctx: typer.Context,
    sources: list[str] = typer.Argument(
        ..., help="Sources written W=p1,p2,... with weights summing to 1."
    ),
    as_json: bool = json_option(),
) -> None:
    """Entropy of a source that picks among SOURCES with the given weights."""
    with handle_errors():
        mixed = information.mix_sources([_parse_source(s) for s in sources])
        emit(
            ctx,
            {
                "probabilities": list(mixed.probabilities),
                "entropy": information.shannon_entropy(mixed),
            },
            as_json,
        )


__all__ = ["app"]

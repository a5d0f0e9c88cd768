"""`mathbook la`: exact matrix algebra, elimination, incidence paths and fitting."""

from pathlib import Path

import typer

from mathbook.cli._common import emit, handle_errors, json_option, read_text_arg
from mathbook.domain import fitting
from mathbook.domain import matrix as la
from mathbook.domain.errors import InvalidInputError, NotInvertibleError
from mathbook.domain.literals import (
    parse_matrix,
    parse_points,
    parse_scalar,
    parse_vector,
)
from mathbook.domain.matrix import Matrix
from mathbook.infrastructure.files import read_points_csv

app = typer.Typer(help="Linear algebra over exact rationals.", no_args_is_help=True)

MATRIX_HELP = "Matrix text ('a b; c d'), a file path, or - for stdin."


def _matrix(source: str) -> Matrix:
    return parse_matrix(read_text_arg(source))


def _split_augmented(m: Matrix) -> tuple[Matrix, tuple[la.Scalar, ...]]:
    if m.n_cols < 2:
        raise InvalidInputError("an augmented matrix needs at least two columns")
    return Matrix(tuple(row[:-1] for row in m.rows)), m.column(m.n_cols - 1)


@app.command("mul")
def mul_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    b: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Matrix product A B."""
    with handle_errors():
        emit(ctx, la.matmul(_matrix(a), _matrix(b)), as_json)


@app.command("add")
def add_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    b: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Entry-wise sum."""
    with handle_errors():
        emit(ctx, la.add(_matrix(a), _matrix(b)), as_json)


@app.command("hadamard")
def hadamard_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    b: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Entry-wise product."""
    with handle_errors():
        emit(ctx, la.hadamard(_matrix(a), _matrix(b)), as_json)


@app.command("transpose")
def transpose_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, la.transpose(_matrix(a)), as_json)


@app.command("scale")
def scale_command(
    ctx: typer.Context,
    c: str = typer.Argument(..., help="Scalar, e.g. 3 or -1/2."),
    a: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """C times A."""
    with handle_errors():
        emit(ctx, la.scale(parse_scalar(c), _matrix(a)), as_json)


@app.command("identity")
def identity_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Size, n >= 1."),
    as_json: bool = json_option(),
) -> None:
    with handle_errors():
        emit(ctx, la.identity(n), as_json)


@app.command("det")
def det_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Exact determinant."""
    with handle_errors():
        emit(ctx, la.determinant(_matrix(a)), as_json)


@app.command("inv")
def inv_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    as_json: bool = json_option(),
) -> None:
    """Exact inverse by Gauss-Jordan elimination."""
    with handle_errors():
        inverse = la.invert(_matrix(a))
        if inverse is None:
            raise NotInvertibleError("the matrix is singular")
        emit(ctx, inverse, as_json)


@app.command("solve")
def solve_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    rhs: str | None = typer.Option(
        None,
        "--rhs",
        "-b",
        help="Right-hand side; without it A is read as an augmented matrix.",
    ),
    residual: bool = typer.Option(
        False, "--residual", help="Also print A x - b for a unique solution."
    ),
    as_json: bool = json_option(),
) -> None:
    """Solve A x = b by Gaussian elimination with partial pivoting."""
    with handle_errors():
        m = _matrix(a)
        coefficients, b = (m, parse_vector(rhs)) if rhs else _split_augmented(m)
        outcome = la.gauss_solve(coefficients, b)
        if outcome.solution is None:
            emit(ctx, outcome, as_json, text=outcome.status)
            return
        if not residual:
            emit(ctx, outcome, as_json, text="\n".join(map(str, outcome.solution)))
            return
        check = la.solve_residual(coefficients, outcome.solution, b)
        emit(ctx, {"solution": outcome.solution, "residual": check}, as_json)


@app.command("mod")
def mod_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    m: int = typer.Argument(..., help="Modulus (>= 1)."),
    as_json: bool = json_option(),
) -> None:
    """Reduce an integer matrix entry-wise modulo M."""
    with handle_errors():
        emit(ctx, la.mat_mod(_matrix(a), m), as_json)


@app.command("invmod")
def invmod_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    m: int = typer.Argument(..., help="Modulus (>= 2)."),
    as_json: bool = json_option(),
) -> None:
    """Inverse of an integer matrix modulo M, via the adjugate."""
    with handle_errors():
        inverse = la.mat_inv_mod(_matrix(a), m)
        if inverse is None:
            raise NotInvertibleError(f"the determinant is not a unit modulo {m}")
        emit(ctx, inverse, as_json)


@app.command("pow")
def pow_command(
    ctx: typer.Context,
    a: str = typer.Argument(..., help=MATRIX_HELP),
    p: int = typer.Argument(..., help="Exponent, p >= 0."),
    as_json: bool = json_option(),
) -> None:
    """A^P by repeated squaring."""
    with handle_errors():
        emit(ctx, la.mat_pow(_matrix(a), p), as_json)


@app.command("paths")
def paths_command(
    ctx: typer.Context,
    incidence: str = typer.Argument(..., help=MATRIX_HELP),
    i: int = typer.Argument(..., help="Start node, 1-based."),
    j: int = typer.Argument(..., help="End node, 1-based."),
    length: int = typer.Option(2, "--length", "-k", help="Edges per route."),
    as_json: bool = json_option(),
) -> None:
    """Number of routes of LENGTH edges from node I to node J."""
    with handle_errors():
        emit(ctx, la.path_count(_matrix(incidence), i, j, length), as_json)


@app.command("fit")
def fit_command(
    ctx: typer.Context,
    points: str | None = typer.Argument(
        None, help="Points written x:y, e.g. '1:2 2:4.1 3:5.9'."
    ),
    csv: Path | None = typer.Option(
        None, "--csv", help="CSV file with a header row; first two columns by default."
    ),
    x_column: str | None = typer.Option(None, "--x-column", help="CSV column of x."),
    y_column: str | None = typer.Option(None, "--y-column", help="CSV column of y."),
    degree: int = typer.Option(1, "--degree", "-d", help="Polynomial degree."),
    through_origin: bool = typer.Option(
        False, "--through-origin", help="Pin the constant term to zero."
    ),
    ratio: bool = typer.Option(
        False, "--ratio", help="Fit y/x = a x + b; coefficients are [b, a]."
    ),
    predict: float | None = typer.Option(
        None, "--predict", help="Evaluate the fitted polynomial at this x."
    ),
    as_json: bool = json_option(),
) -> None:
    """Least-squares fit; coefficients in ascending powers."""
    with handle_errors():
        if (points is None) == (csv is None):
            raise InvalidInputError("give either inline points or --csv")
        data = (
            read_points_csv(csv, x_column=x_column, y_column=y_column)
            if csv is not None
            else parse_points(read_text_arg(points or ""))
        )
        if ratio:
            fit = fitting.fit_ratio_model(data)
        else:
            fit = fitting.fit_poly(data, degree, through_origin=through_origin)
        if predict is None:
            emit(ctx, fit, as_json)
            return
        emit(
            ctx,
            {
                "coefficients": fit.coefficients,
                "sse": fit.sse,
                "prediction": fitting.fit_prediction(fit, predict),
            },
            as_json,
        )


__all__ = ["app"]

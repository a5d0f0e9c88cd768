"""Dense matrix algebra over exact rationals, integers and floats.

Entries keep whatever scalar type they were built from; determinant, inverse
and elimination promote to ``Fraction`` so results are exact.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from mathbook.domain.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidInputError,
    InvalidModulusError,
    NonSquareError,
)
from mathbook.domain.numtheory import inv_mod, mod_reduce
from mathbook.domain.polynomials import as_fraction

type Scalar = int | Fraction | float
type Row = tuple[Scalar, ...]
type SolveStatus = Literal["unique", "inconsistent", "underdetermined"]


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix with at least one row and one column."""

    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise DimensionMismatchError("a matrix needs at least one row and column")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise DimensionMismatchError("all matrix rows must have the same length")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def at(self, i: int, j: int) -> Scalar:
        """Entry at 0-based row ``i`` and column ``j``."""
        return self.rows[i][j]

    def column(self, j: int) -> Row:
        return tuple(row[j] for row in self.rows)


@dataclass(frozen=True)
class SolveOutcome:
    """Result of Gaussian elimination; ``solution`` is set only when unique."""

    status: SolveStatus
    solution: tuple[Fraction, ...] | None = None


def matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    """Build a matrix from nested iterables."""
    return Matrix(tuple(tuple(row) for row in rows))


def identity(n: int) -> Matrix:
    if n < 1:
        raise DimensionMismatchError(f"identity size must be >= 1, got {n}")
    return Matrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def zeros(n_rows: int, n_cols: int) -> Matrix:
    return Matrix(tuple(tuple(0 for _ in range(n_cols)) for _ in range(n_rows)))


def ones(n_rows: int, n_cols: int) -> Matrix:
    return Matrix(tuple(tuple(1 for _ in range(n_cols)) for _ in range(n_rows)))


def _require_same_shape(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes differ: {a.shape} vs {b.shape}")


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise NonSquareError(f"expected a square matrix, got {a.shape}")


def _to_fractions(a: Matrix) -> list[list[Fraction]]:
    return [[as_fraction(x) for x in row] for row in a.rows]


def transpose(a: Matrix) -> Matrix:
    return Matrix(tuple(zip(*a.rows, strict=True)))


def add(a: Matrix, b: Matrix) -> Matrix:
    _require_same_shape(a, b)
    return Matrix(
        tuple(
            tuple(x + y for x, y in zip(ra, rb, strict=True))
            for ra, rb in zip(a.rows, b.rows, strict=True)
        )
    )


def scale(c: Scalar, a: Matrix) -> Matrix:
    return Matrix(tuple(tuple(c * x for x in row) for row in a.rows))


def hadamard(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise product."""
    _require_same_shape(a, b)
    return Matrix(
        tuple(
            tuple(x * y for x, y in zip(ra, rb, strict=True))
            for ra, rb in zip(a.rows, b.rows, strict=True)
        )
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Row-by-column product, ``c_ij = sum_k a_ik b_kj``."""
    if a.n_cols != b.n_rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.shape} by {b.shape}: inner sizes differ"
        )
    columns = [b.column(j) for j in range(b.n_cols)]
    return Matrix(
        tuple(
            tuple(sum(x * y for x, y in zip(row, col, strict=True)) for col in columns)
            for row in a.rows
        )
    )


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    _require_square(a)
    m = _to_fractions(a)
    n = len(m)
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def _pivot_row(m: list[list[Fraction]], column: int, start: int) -> int | None:
    best = max(range(start, len(m)), key=lambda r: abs(m[r][column]))
    return None if m[best][column] == 0 else best


def invert(a: Matrix) -> Matrix | None:
    """Exact inverse by Gauss-Jordan elimination; None when singular."""
    _require_square(a)
    n = a.n_rows
    m = [
        row + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(_to_fractions(a))
    ]
    for col in range(n):
        pivot = _pivot_row(m, col, col)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        lead = m[col][col]
        m[col] = [x / lead for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col], strict=True)]
    return Matrix(tuple(tuple(row[n:]) for row in m))


def gauss_solve(a: Matrix, b: Sequence[Scalar]) -> SolveOutcome:
    """Solve ``A x = b`` by elimination with partial pivoting and back substitution.

    The pivot in each column is the entry of largest absolute value.
    Singular systems are classified from the triangular form.
    """
    if len(b) != a.n_rows:
        raise DimensionMismatchError(
            f"right-hand side has {len(b)} entries, matrix has {a.n_rows} rows"
        )
    m = [row + [Fraction(rhs)] for row, rhs in zip(_to_fractions(a), b, strict=True)]
    n_rows, n_cols = a.shape
    pivot_cols: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = _pivot_row(m, col, r)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for below in range(r + 1, n_rows):
            factor = m[below][col] / m[r][col]
            if factor:
                m[below] = [x - factor * y for x, y in zip(m[below], m[r], strict=True)]
        pivot_cols.append(col)
        r += 1
    if any(row[-1] != 0 for row in m[r:]):
        return SolveOutcome("inconsistent")
    if len(pivot_cols) < n_cols:
        return SolveOutcome("underdetermined")
    x = [Fraction(0)] * n_cols
    for i in reversed(range(n_cols)):
        tail = sum((m[i][j] * x[j] for j in range(i + 1, n_cols)), Fraction(0))
        x[i] = (m[i][-1] - tail) / m[i][i]
    return SolveOutcome("unique", tuple(x))


def solve_residual(
    a: Matrix, x: Sequence[Scalar], b: Sequence[Scalar]
) -> tuple[Scalar, ...]:
    """``A x - b`` as a vector."""
    if len(x) != a.n_cols or len(b) != a.n_rows:
        raise DimensionMismatchError("vector lengths do not match the matrix")
    ax = matmul(a, Matrix(tuple((v,) for v in x))).column(0)
    return tuple(p - q for p, q in zip(ax, b, strict=True))


def _as_int(value: Scalar) -> int:
    if isinstance(value, int):
        return value
    frac = Fraction(value)
    if frac.denominator != 1:
        raise InvalidInputError(f"modular matrices need integer entries, got {value}")
    return frac.numerator


def _int_rows(a: Matrix) -> list[list[int]]:
    return [[_as_int(x) for x in row] for row in a.rows]


def mat_mod(a: Matrix, m: int) -> Matrix:
    """Reduce every (integer) entry to ``[0, m)``."""
    if m < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {m}")
    return Matrix(tuple(tuple(mod_reduce(x, m) for x in row) for row in _int_rows(a)))


def _minor(rows: list[list[int]], i: int, j: int) -> Matrix:
    return Matrix(
        tuple(
            tuple(x for c, x in enumerate(row) if c != j)
            for r, row in enumerate(rows)
            if r != i
        )
    )


def adjugate(a: Matrix) -> Matrix:
    """Transpose of the cofactor matrix, exact for integer entries."""
    _require_square(a)
    rows = _int_rows(a)
    n = len(rows)
    if n == 1:
        return Matrix(((1,),))
    cofactors = [
        [(-1) ** (i + j) * int(determinant(_minor(rows, i, j))) for j in range(n)]
        for i in range(n)
    ]
    return transpose(matrix(cofactors))


def mat_inv_mod(a: Matrix, m: int) -> Matrix | None:
    """Inverse modulo ``m`` as ``inv(det) * adj(A)``; None when gcd(det, m) > 1."""
    _require_square(a)
    det = determinant(matrix(_int_rows(a)))
    det_inverse = inv_mod(int(det), m)
    if det_inverse is None:
        return None
    return mat_mod(scale(det_inverse, adjugate(a)), m)


def mat_pow(a: Matrix, p: int) -> Matrix:
    """``A**p`` by repeated squaring; ``A**0`` is the identity."""
    _require_square(a)
    if p < 0:
        raise InvalidInputError(f"matrix power must be >= 0, got {p}")
    result = identity(a.n_rows)
    base = a
    while p:
        if p & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        p >>= 1
    return result


def validate_incidence(a: Matrix) -> None:
    """An incidence matrix is square, symmetric and non-negative integer."""
    _require_square(a)
    rows = _int_rows(a)
    if any(x < 0 for row in rows for x in row):
        raise InvalidInputError("incidence entries must be non-negative")
    if rows != [list(col) for col in zip(*rows, strict=True)]:
        raise InvalidInputError("incidence matrix must be symmetric")


def path_count(incidence: Matrix, i: int, j: int, length: int) -> int:
    """Number of walks of ``length`` edges from node ``i`` to node ``j`` (1-based)."""
    validate_incidence(incidence)
    n = incidence.n_rows
    for index in (i, j):
        if not 1 <= index <= n:
            raise IndexOutOfRangeError(f"node {index} is outside 1..{n}")
    if length < 1:
        raise InvalidInputError(f"path length must be >= 1, got {length}")
    return _as_int(mat_pow(incidence, length).at(i - 1, j - 1))


__all__ = [
    "Matrix",
    "Row",
    "Scalar",
    "SolveOutcome",
    "add",
    "adjugate",
    "determinant",
    "gauss_solve",
    "hadamard",
    "identity",
    "invert",
    "mat_inv_mod",
    "mat_mod",
    "mat_pow",
    "matmul",
    "matrix",
    "ones",
    "path_count",
    "scale",
    "solve_residual",
    "transpose",
    "validate_incidence",
    "zeros",
]

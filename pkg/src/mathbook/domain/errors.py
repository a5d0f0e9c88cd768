"""Domain error hierarchy.

Every failure a domain operation can raise is a ``MathbookError`` subclass. The
``code`` class attribute is the stable name the CLI prints on stderr.
"""

from typing import ClassVar


class MathbookError(ValueError):
    """Base class for domain failures."""

    code: ClassVar[str] = "MathbookError"


# number theory


class InvalidModulusError(MathbookError):
    code = "InvalidModulus"


class EmptyRangeError(MathbookError):
    code = "EmptyRange"


class InvalidInputError(MathbookError):
    code = "InvalidInput"


class UnsupportedCriterionError(MathbookError):
    code = "UnsupportedCriterion"


class ParseError(MathbookError):
    code = "ParseError"


class NotInvertibleError(MathbookError):
    code = "NotInvertible"


class InconsistentSystemError(MathbookError):
    code = "InconsistentSystem"


# combinatorics and information


class InvalidSelectionError(MathbookError):
    code = "InvalidSelection"


class InvalidProbabilityError(MathbookError):
    code = "InvalidProbability"


class InvalidCountError(MathbookError):
    code = "InvalidCount"


class InvalidDistributionError(MathbookError):
    code = "InvalidDistribution"


# linear algebra


class DimensionMismatchError(MathbookError):
    code = "DimensionMismatch"


class NonSquareError(MathbookError):
    code = "NonSquare"


class IndexOutOfRangeError(MathbookError):
    code = "IndexOutOfRange"


class InsufficientPointsError(MathbookError):
    code = "InsufficientPoints"


class SingularNormalEquationsError(MathbookError):
    code = "SingularNormalEquations"


class NonPositiveError(MathbookError):
    code = "NonPositive"


# polynomials


class DivisionByZeroPolynomialError(MathbookError):
    code = "DivisionByZeroPolynomial"


class BothZeroError(MathbookError):
    code = "BothZero"


class NotQuadraticError(MathbookError):
    code = "NotQuadratic"


class DuplicateAbscissaError(MathbookError):
    code = "DuplicateAbscissa"


class LengthMismatchError(MathbookError):
    code = "LengthMismatch"


# crypto


class NotPrimeError(MathbookError):
    code = "NotPrime"


class BadExponentError(MathbookError):
    code = "BadExponent"


class BadModulusError(MathbookError):
    code = "BadModulus"


class CharOutOfRangeError(MathbookError):
    code = "CharOutOfRange"


class NonAlphabeticError(MathbookError):
    code = "NonAlphabetic"


class NonInvertibleAError(MathbookError):
    code = "NonInvertibleA"


class DegenerateError(MathbookError):
    code = "Degenerate"


class NonInvertibleKeyError(MathbookError):
    code = "NonInvertibleKey"


# complex numbers


class DivisionByZeroError(MathbookError):
    code = "DivisionByZero"


class ZeroInputError(MathbookError):
    code = "ZeroInput"


class EmptyListError(MathbookError):
    code = "EmptyList"


class InvalidCircuitError(MathbookError):
    code = "InvalidCircuit"


# applied


class OutOfRangeError(MathbookError):
    code = "OutOfRange"


class WindExceedsTasError(MathbookError):
    code = "WindExceedsTas"


class NotAConicError(MathbookError):
    code = "NotAConic"


# imaging


class NonBinaryError(MathbookError):
    code = "NonBinary"


class BadRectangleError(MathbookError):
    code = "BadRectangle"


class BadTError(MathbookError):
    code = "BadT"


class MalformedPgmError(MathbookError):
    code = "MalformedPgm"

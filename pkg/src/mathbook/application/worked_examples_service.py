"""Replay the worked examples against the library.

Every module contributes a group of checks with a known expected value. The
service logs one step banner per group and one ``[ ok ]`` / ``[warn]`` line per
check, then writes ``checks.csv`` with one row per check.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, NamedTuple

from mathbook.application._step_report import banner, check, info
from mathbook.application.plain_output import render_plain
from mathbook.application.use_case_utils import write_csv
from mathbook.domain import (
    applied,
    combinatorics,
    complexnum,
    crypto,
    fitting,
    information,
    numtheory,
    polynomials,
    reed_solomon,
)
from mathbook.domain import matrix as la
from mathbook.domain.errors import MathbookError
from mathbook.domain.literals import parse_matrix

CHECKS_CSV = "checks.csv"
CHECKS_HEADER = ("module", "check", "expected", "actual", "status")

ECOLI_FRAGMENT = "AGCTTTTCATTCTGACTGCAACGGGCAATATG"
AFFINE_PLAINTEXT = "notenemosreservadeagua"
RS_DATA = ("1.2", "-3.2", "-5.4", "-1.1")
RS_CORRUPTED = ("1.2", "3.2", "-5.4", "-1.1", "12.8", "44.2", "93.8", "167.1")
HILL_KEY = "3 2; 5 3"
ROAD_NETWORK = "0 2 0 1 3; 2 0 1 0 1; 0 1 0 1 0; 1 0 1 0 2; 3 1 0 2 0"
ELIMINATION_SYSTEM = "0 -1 3; 1 2 -1; -2 3 1"
ELIMINATION_RHS = (2, -2, 0)
BRAKING_POINTS = (
    (Fraction(125, 9), 35),
    (Fraction(275, 18), 40),
    (Fraction(50, 3), 45),
    (Fraction(325, 18), 50),
    (Fraction(175, 9), 55),
    (Fraction(125, 6), 65),
    (Fraction(200, 9), 70),
)


@dataclass(frozen=True)
class WorkedExample:
    """One golden value; ``tolerance`` switches to an absolute float comparison."""

    name: str
    expected: Any
    compute: Callable[[], Any]
    tolerance: float | None = None


class CheckOutcome(NamedTuple):
    module: str
    check: str
    expected: str
    actual: str
    passed: bool


class VerifyReport(NamedTuple):
    outcomes: tuple[CheckOutcome, ...]
    csv_path: Path

    @property
    def failed(self) -> int:
        return sum(1 for outcome in self.outcomes if not outcome.passed)

    @property
    def passed(self) -> int:
        return len(self.outcomes) - self.failed


def _numtheory() -> tuple[WorkedExample, ...]:
    return (
        WorkedExample(
            "ISBN check digit of 968-12-0618",
            "5",
            lambda: numtheory.isbn10_check_digit("968120618"),
        ),
        WorkedExample(
            "ISBN check digit of 0-486-45844",
            "X",
            lambda: numtheory.isbn10_check_digit("048645844"),
        ),
        WorkedExample(
            "ISBN 968-12-0618-4 is rejected",
            False,
            lambda: numtheory.isbn10_validate("9681206184"),
        ),
        WorkedExample("gcd(1620, 1575)", 45, lambda: numtheory.gcd_euclid(1620, 1575)),
        WorkedExample("units of Z_8", [1, 3, 5, 7], lambda: numtheory.zm_units(8)),
        WorkedExample(
            "trial division of a 100-digit number (s)",
            97.46,
            lambda: numtheory.trial_division_seconds(100),
            tolerance=0.1,
        ),
    )


def _combinatorics() -> tuple[WorkedExample, ...]:
    return (
        WorkedExample("C(9, 4)", 126, lambda: combinatorics.binomial(9, 4)),
        WorkedExample("V(26, 3)", 15600, lambda: combinatorics.perm(26, 3)),
        WorkedExample("CR(5, 3)", 35, lambda: combinatorics.comb_rep(5, 3)),
        WorkedExample(
            "lottery C(49, 6)", 13_983_816, lambda: combinatorics.comb(49, 6)
        ),
        WorkedExample(
            "P(X = 13), n = 30, p = 1/2",
            0.1115,
            lambda: combinatorics.binomial_pmf(
                combinatorics.bernoulli_spec(30, "1/2", 13)
            ),
            tolerance=5e-4,
        ),
        WorkedExample(
            "two dice summing 5",
            Fraction(1, 9),
            lambda: combinatorics.dice_sum_probability(5),
        ),
    )


def _information() -> tuple[WorkedExample, ...]:
    return (
        WorkedExample(
            "entropy of an E. coli fragment (bits)",
            4.5736,
            lambda: information.sequence_entropy(ECOLI_FRAGMENT),
            tolerance=1e-4,
        ),
        WorkedExample(
            "64 equiprobable codons (bits)",
            6.0,
            lambda: information.entropy_from_counts([1] * 64),
            tolerance=1e-12,
        ),
    )


def _crypto() -> tuple[WorkedExample, ...]:
    hill_key = parse_matrix(HILL_KEY)
    return (
        WorkedExample(
            "RSA private exponent for p=11, q=13, e=17",
            113,
            lambda: crypto.rsa_keypair(11, 13, 17).d,
        ),
        WorkedExample(
            "RSA encryption of 'Hola' (codes 72 111 108 97)",
            [63, 89, 114, 15],
            lambda: crypto.rsa_encrypt_text("Hola", 143, 17),
        ),
        WorkedExample(
            "RSA decryption round trip",
            "Hola",
            lambda: crypto.rsa_decrypt_text([63, 89, 114, 15], 143, 113),
        ),
        WorkedExample(
            "Hill encryption of 'hola'",
            "XZHD",
            lambda: crypto.hill_encrypt("hola", hill_key),
        ),
        WorkedExample(
            "Hill key inverse mod 26",
            parse_matrix("23 2; 5 23"),
            lambda: la.mat_inv_mod(hill_key, crypto.ALPHABET_SIZE),
        ),
        WorkedExample(
            "affine encryption with a=1, b=3",
            "QRWHQHPRVUHVHUYDGHDJXD",
            lambda: crypto.affine_encrypt(AFFINE_PLAINTEXT, crypto.affine_key(1, 3)),
        ),
        WorkedExample(
            "affine crack best candidate",
            crypto.AffineKey(1, 3),
            lambda: crypto.affine_crack("QRWHQHPRVUHVHUYDGHDJXD")[0],
        ),
    )


def _reed_solomon() -> tuple[WorkedExample, ...]:
    corrupted = reed_solomon.codeword(RS_CORRUPTED)

    def repaired() -> tuple[tuple[int, ...], tuple[Fraction, ...]] | None:
        fix = reed_solomon.rs_correct(corrupted, 2)
        return None if fix is None else (fix.error_positions, fix.corrected_values)

    return (
        WorkedExample(
            "redundancy of [1.2, -3.2, -5.4, -1.1]",
            (Fraction(14), Fraction("44.2"), Fraction("93.8"), Fraction("167.1")),
            lambda: reed_solomon.rs_encode(RS_DATA).values[len(RS_DATA) :],
        ),
        WorkedExample(
            "corrupted codeword fails the degree test",
            False,
            lambda: reed_solomon.rs_verify(corrupted),
        ),
        WorkedExample(
            "two errors repaired at positions 2 and 5",
            ((2, 5), (Fraction("-3.2"), Fraction(14))),
            repaired,
        ),
    )


def _linalg() -> tuple[WorkedExample, ...]:
    road = parse_matrix(ROAD_NETWORK)
    return (
        WorkedExample(
            "Gaussian elimination of a 3x3 system",
            (Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)),
            lambda: la.gauss_solve(
                parse_matrix(ELIMINATION_SYSTEM), ELIMINATION_RHS
            ).solution,
        ),
        WorkedExample(
            "inverse of [[2, -1], [0, 3]]",
            parse_matrix("1/2 1/6; 0 1/3"),
            lambda: la.invert(parse_matrix("2 -1; 0 3")),
        ),
        WorkedExample(
            "Falk scheme product 3x2 by 2x3",
            parse_matrix("-2 5/2 -2; 1 -1 3/2; -4 11/2 -3"),
            lambda: la.matmul(
                parse_matrix("2 1; -1 0; 4 3"), parse_matrix("-1 1 -3/2; 0 1/2 1")
            ),
        ),
        WorkedExample(
            "two-leg routes from node 5 to node 3",
            3,
            lambda: la.path_count(road, 5, 3, 2),
        ),
    )


def _fitting() -> tuple[WorkedExample, ...]:
    def slope() -> float:
        fit = fitting.fit_poly(BRAKING_POINTS, 1, through_origin=True)
        return fit.coefficients[1]

    def ratio() -> tuple[float, ...]:
        return fitting.fit_ratio_model(BRAKING_POINTS).coefficients

    return (
        WorkedExample(
            "braking slope through the origin",
            2.881,
            slope,
            tolerance=0.005,
        ),
        WorkedExample(
            "ratio model quadratic term a",
            0.078,
            lambda: ratio()[1],
            tolerance=0.001,
        ),
        WorkedExample(
            "ratio model reaction term b",
            1.412,
            lambda: ratio()[0],
            tolerance=0.01,
        ),
        WorkedExample(
            "friction coefficient",
            0.653,
            lambda: fitting.friction_coefficient(ratio()[1]),
            tolerance=0.005,
        ),
    )


def _navigation() -> tuple[WorkedExample, ...]:
    def solve() -> applied.WindSolution:
        return applied.wind_triangle(143, 120, 140, 11)

    return (
        WorkedExample(
            "ground speed (kt)", 109.01, lambda: solve().ground_speed, tolerance=0.05
        ),
        WorkedExample(
            "drift angle magnitude (deg)",
            0.27,
            lambda: abs(solve().drift_angle),
            tolerance=0.02,
        ),
    )


def _complex() -> tuple[WorkedExample, ...]:
    def square_roots_of_minus_one() -> tuple[complex, ...]:
        roots = complexnum.nth_roots(complexnum.ExactComplex(-1), 2)
        return tuple(
            complex(round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0)
            for z in map(complexnum.to_rect, roots)
        )

    def phasor_total() -> complexnum.Polar:
        return complexnum.phasor_sum(
            [complexnum.phasor(10, 60), complexnum.phasor(5, 45)]
        )

    return (
        WorkedExample(
            "(2-2i)/(1+3i) exactly",
            complexnum.ExactComplex(Fraction(-2, 5), Fraction(-4, 5)),
            lambda: complexnum.c_div(
                complexnum.ExactComplex(2, -2), complexnum.ExactComplex(1, 3)
            ),
        ),
        WorkedExample("square roots of -1", (1j, -1j), square_roots_of_minus_one),
        WorkedExample(
            "10∠60° + 5∠45° modulus",
            14.89,
            lambda: phasor_total().modulus,
            tolerance=0.01,
        ),
        WorkedExample(
            "10∠60° + 5∠45° angle (deg)",
            55.0,
            lambda: phasor_total().degrees,
            tolerance=0.5,
        ),
    )


def _polynomials() -> tuple[WorkedExample, ...]:
    numerator = polynomials.polynomial([6, 0, -1, 5])
    divisor = polynomials.polynomial([-4, 1])
    return (
        WorkedExample(
            "golden ratio as the positive root of x^2 - x - 1",
            (1 + math.sqrt(5)) / 2,
            lambda: polynomials.quadratic_roots(1, -1, -1)[0],
            tolerance=1e-12,
        ),
        WorkedExample(
            "(5x^3 - x^2 + 6) / (x - 4)",
            (polynomials.polynomial([76, 19, 5]), polynomials.polynomial([310])),
            lambda: polynomials.poly_divmod(numerator, divisor),
        ),
    )


WORKED_EXAMPLES: dict[str, Callable[[], tuple[WorkedExample, ...]]] = {
    "numtheory": _numtheory,
    "combinatorics": _combinatorics,
    "information": _information,
    "crypto": _crypto,
    "reed-solomon": _reed_solomon,
    "linalg": _linalg,
    "fitting": _fitting,
    "navigation": _navigation,
    "complex": _complex,
    "polynomials": _polynomials,
}


def _as_text(value: Any) -> str:
    return " | ".join(render_plain(value).splitlines())


def _matches(example: WorkedExample, actual: Any) -> bool:
    if example.tolerance is None:
        return bool(actual == example.expected)
    return math.isclose(
        float(actual), float(example.expected), rel_tol=0.0, abs_tol=example.tolerance
    )


def run_example(module: str, example: WorkedExample) -> CheckOutcome:
    """Evaluate one example; a domain error counts as a failed check."""
    expected = _as_text(example.expected)
    try:
        actual_value = example.compute()
    except MathbookError as exc:
        return CheckOutcome(module, example.name, expected, f"{exc.code}: {exc}", False)
    passed = _matches(example, actual_value)
    return CheckOutcome(module, example.name, expected, _as_text(actual_value), passed)


def verify_worked_examples(
    *,
    data_dir: Path,
    modules: tuple[str, ...] | None = None,
) -> VerifyReport:
    """Run the selected groups (all by default) and write ``checks.csv``."""
    selected = modules or tuple(WORKED_EXAMPLES)
    unknown = [name for name in selected if name not in WORKED_EXAMPLES]
    if unknown:
        raise ValueError(
            f"unknown module(s) {', '.join(unknown)}; "
            f"choose from {', '.join(WORKED_EXAMPLES)}"
        )

    outcomes: list[CheckOutcome] = []
    for step, module in enumerate(selected, start=1):
        banner(step, module)
        for example in WORKED_EXAMPLES[module]():
            outcome = run_example(module, example)
            detail = f"expected {outcome.expected}, got {outcome.actual}"
            check(outcome.passed, example.name, detail)
            outcomes.append(outcome)

    failed = sum(1 for outcome in outcomes if not outcome.passed)
    info(f"{len(outcomes) - failed} of {len(outcomes)} checks passed")
    csv_path = write_csv(
        data_dir / CHECKS_CSV,
        CHECKS_HEADER,
        (
            (o.module, o.check, o.expected, o.actual, "pass" if o.passed else "fail")
            for o in outcomes
        ),
    )
    return VerifyReport(tuple(outcomes), csv_path)


__all__ = [
    "CHECKS_CSV",
    "WORKED_EXAMPLES",
    "CheckOutcome",
    "VerifyReport",
    "WorkedExample",
    "run_example",
    "verify_worked_examples",
]

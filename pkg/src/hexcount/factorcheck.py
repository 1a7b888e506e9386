"""Verification layer for the reduced polynomial determinants.

After row/column reduction, the fixed-rhombus determinant at the
distinguished center positions boils down to an order a-1 matrix whose
(i, j) entry (2 <= i, j <= a) is

    (b+i-j+2)_{j-2} * (c-i+j+2)_{a-j} * H(b, c, x, y, i, j)

with H a fixed quartic and (x, y) specialized to x = (a+b)/2 and either
y = (a+c-1)/2 (the CENTRAL variant) or y = (a+c)/2 (ALMOST_CENTRAL).
Entries are polynomials in b and c.  This module checks two families of
statements about them with exact rational arithmetic:

* factored closed forms for the determinants themselves (products of
  linear factors times a terminating sum), certified by evaluating both
  sides on integer grids larger than the degree bound, and
* the row-combination identities behind the linear-factor divisibility
  claims: for suitable specializations c = -k or b = -k, an explicit
  weighted sum of rows vanishes (or reproduces the negated (k+1)-th row).

Matrices here are small and rational, so determinants use plain exact
Gaussian elimination rather than the fraction-free integer engine.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import Rational, factorial, pochhammer

RatMatrix = List[List[Fraction]]

SINGULAR_MSG = "singular coefficient, choose another evaluation point"


class MatrixVariant(enum.Enum):
    """Which center the reduced matrix is specialized to."""

    CENTRAL = "central"  # y = (a+c-1)/2
    ALMOST_CENTRAL = "almost_central"  # y = (a+c)/2


class RowIdentity(enum.Enum):
    """Row-combination identities; one per linear-factor family and variant."""

    C_FACTOR = "c_factor"
    B_FACTOR_1 = "b_factor_1"
    B_FACTOR_2 = "b_factor_2"
    C_FACTOR_HAT = "c_factor_hat"
    B_FACTOR_1_HAT = "b_factor_1_hat"
    B_FACTOR_2_HAT = "b_factor_2_hat"


def h_poly(b: Rational, c: Rational, x: Rational, y: Rational, i: int, j: int) -> Fraction:
    """The quartic entry factor H."""
    b, c, x, y = Fraction(b), Fraction(c), Fraction(x), Fraction(y)
    return (
        (b + i - j + 1) * (c - i + j + 1) * (c - y + j - 1) * (b + i - x - 1)
        - (c - i + j) * (c - i + j + 1) * (x - j + 1) * (b + i - x - 1)
        - (b + i - j) * (b + i - j + 1) * (y - i + 2) * (c - y + j - 1)
        + (b + i - j + 1) * (c - i + j + 1) * (x - j + 1) * (y - i + 2)
    )


def build_poly_matrix(a: int, variant: MatrixVariant, b: Rational, c: Rational) -> RatMatrix:
    """Reduced matrix of order a-1 (rows/columns indexed 2..a) at one (b, c)."""
    if a < 2:
        raise ValueError(f"matrix order a-1 requires a >= 2, got a={a}")
    b, c = Fraction(b), Fraction(c)
    x = Fraction(a + b, 2)
    if variant is MatrixVariant.CENTRAL:
        y = Fraction(a + c - 1, 2)
    elif variant is MatrixVariant.ALMOST_CENTRAL:
        y = Fraction(a + c, 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return [
        [
            pochhammer(b + i - j + 2, j - 2)
            * pochhammer(c - i + j + 2, a - j)
            * h_poly(b, c, x, y, i, j)
            for j in range(2, a + 1)
        ]
        for i in range(2, a + 1)
    ]


def det_rational(matrix: RatMatrix) -> Fraction:
    """Exact determinant over the rationals by Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    m = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for r in range(k + 1, n):
            factor = m[r][k] / pivot
            if factor == 0:
                continue
            for col in range(k, n):
                m[r][col] -= factor * m[k][col]
    return det


def _shared_prefactor(a: int, b: Fraction, c: Fraction) -> Fraction:
    value = Fraction(1)
    for i in range(2, a):
        value *= pochhammer(1 + b + c, i - 1)
    for i in range(2, a + 1):
        value *= factorial(i - 1)
    return value


def _half(n: Rational) -> Fraction:
    return Fraction(n) / 2


def factored_det_central(a: int, b: Rational, c: Rational) -> Fraction:
    """Factored closed form of det(build_poly_matrix(a, CENTRAL, b, c))."""
    if a < 2:
        raise ValueError(f"requires a >= 2, got a={a}")
    b, c = Fraction(b), Fraction(c)
    value = _shared_prefactor(a, b, c)
    if a % 2 == 1:
        value *= (
            2 ** (a - 1)
            * pochhammer(_half(b + 1), (a - 1) // 2) ** 2
            * pochhammer(_half(c + 2), (a - 1) // 2)
            * pochhammer(_half(1 + b + c), (a - 1) // 2)
        )
        acc = Fraction(0)
        for k in range((a - 1) // 2 + 1):
            tail = (a - 2 * k - 1) // 2
            acc += (
                pochhammer(_half(c + 1), k)
                * pochhammer(_half(1 + b + c), k)
                * pochhammer(_half(c + 2 * k + 2), tail)
                * pochhammer(_half(b + c + 2 * k + 3), tail)
                * pochhammer(_half(1), tail)
                / pochhammer(1, tail)
            )
    else:
        value *= (
            2 ** (a - 2)
            * b
            * pochhammer(_half(b + 2), (a - 2) // 2) ** 2
            * pochhammer(_half(c + 1), a // 2)
            * pochhammer(_half(1 + b + c), a // 2)
        )
        acc = Fraction(0)
        for k in range((a - 2) // 2 + 1):
            tail = (a - 2 * k - 2) // 2
            acc += (
                pochhammer(_half(c + 2), k)
                * pochhammer(_half(1 + b + c), k)
                * pochhammer(_half(c + 2 * k + 3), tail)
                * pochhammer(_half(b + c + 2 * k + 3), tail)
                * pochhammer(_half(1), tail)
                / pochhammer(1, tail)
            )
    return value * acc


def factored_det_almost_central(a: int, b: Rational, c: Rational) -> Fraction:
    """Factored closed form of det(build_poly_matrix(a, ALMOST_CENTRAL, b, c))."""
    if a < 2:
        raise ValueError(f"requires a >= 2, got a={a}")
    b, c = Fraction(b), Fraction(c)
    value = _shared_prefactor(a, b, c) * 2 ** (a - 1)
    if a % 2 == 1:
        value *= (
            pochhammer(_half(b + 1), (a - 1) // 2) ** 2
            * pochhammer(_half(c + 1), (a - 1) // 2)
            * pochhammer(_half(2 + b + c), (a - 1) // 2)
        )
        head = (a - 1) // 2
        bracket = (
            pochhammer(_half(c + 1), head)
            * pochhammer(_half(b + c + 2), head)
            * pochhammer(_half(1), head)
            / pochhammer(1, head)
        )
        for k in range(1, (a - 1) // 2 + 1):
            tail = (a - 2 * k - 1) // 2
            bracket += (
                pochhammer(_half(c + 2), k - 1)
                * pochhammer(_half(b + c), k)
                * pochhammer(_half(c + 2 * k + 1), (a - 2 * k + 1) // 2)
                * pochhammer(_half(b + c + 2 * k + 2), tail)
                * pochhammer(_half(1), tail)
                / pochhammer(1, tail)
            )
    else:
        value *= (
            pochhammer(_half(b), a // 2)
            * pochhammer(_half(b + 2), (a - 2) // 2)
            * pochhammer(_half(c + 2), (a - 2) // 2)
            * pochhammer(_half(2 + b + c), (a - 2) // 2)
        )
        bracket = (
            pochhammer(_half(c + 2), (a - 2) // 2)
            * pochhammer(_half(b + c + 2), a // 2)
            * pochhammer(_half(1), a // 2)
            / pochhammer(1, (a - 2) // 2)
        )
        for k in range(1, a // 2 + 1):
            tail = (a - 2 * k) // 2
            bracket += (
                pochhammer(_half(c + 1), k)
                * pochhammer(_half(b + c), k)
                * pochhammer(_half(c + 2 * k + 2), tail)
                * pochhammer(_half(b + c + 2 * k + 2), tail)
                * pochhammer(_half(1), tail)
                / pochhammer(1, tail)
            )
    return value * bracket


def p_poly(n: int, c: Rational) -> Fraction:
    """Auxiliary polynomial sequence appearing in the B-factor coefficients."""
    if n < 1:
        raise ValueError(f"p_poly is defined for n >= 1, got {n}")
    c = Fraction(c)
    return sum(
        (
            pochhammer(_half(1 + c - n), n - h - 1) * pochhammer(_half(1 + c - 2 * h + n), h)
            for h in range(n)
        ),
        Fraction(0),
    )


def _ratio(numerator: Fraction, denominator: Fraction) -> Fraction:
    if denominator == 0:
        raise ValueError(SINGULAR_MSG)
    return numerator / denominator


def _c_factor_coeffs(a: int, k: int, b: Fraction, shifted: bool) -> Dict[int, Fraction]:
    lo = (a - k + 2 + (0 if shifted else 1)) // 2
    coeffs = {}
    for i in range(lo, a - k + 2):
        m = a - k + 1 - i
        if shifted:
            sign = (-1) ** (i - 1)
            rising = pochhammer(_half(-a + k - 2 + 2 * i), m)
        else:
            sign = (-1) ** i
            rising = pochhammer(_half(-a + k - 1 + 2 * i), m)
        numerator = sign * pochhammer(b + i, m) * rising
        denominator = pochhammer(1, m) * pochhammer(_half(b - a + 2 * i - 2), m)
        coeffs[i] = _ratio(numerator, denominator)
    return coeffs


def _b_factor_coeffs(a: int, k: int, c: Fraction, second: bool, shifted: bool) -> Dict[int, Fraction]:
    lo = k + 3 if second else k + 2
    den_shift = 4 if shifted else 3
    coeffs = {}
    for i in range(lo, (a + k + 2) // 2 + 1):
        if second:
            length = rising_len = i - k - 1
            poly = p_poly(i - k - 2, c + a - k - i + (1 if shifted else 0))
        else:
            length = i - k if shifted else i - k - 2
            rising_len = i - k - 2
            poly = p_poly(i - k - 1, c + a - k - i + (2 if shifted else 1))
        numerator = (
            (-1) ** (i - k)
            * pochhammer(c + a - i + 2, length)
            * pochhammer(_half(a + k - 2 * i + 4), rising_len)
        )
        denominator = pochhammer(1, i - k - 1) * pochhammer(_half(c + a - 2 * i + den_shift), i - k - 2) ** 2
        coeffs[i] = _ratio(numerator, denominator) * poly
    return coeffs


def _identity_setup(identity: RowIdentity, a: int, k: int, free_param: Rational):
    """Validate (a, k) for the identity; return (matrix, coefficients by row)."""
    free = Fraction(free_param)
    if identity in (RowIdentity.C_FACTOR, RowIdentity.C_FACTOR_HAT):
        shifted = identity is RowIdentity.C_FACTOR_HAT
        if shifted:
            if not (1 <= k <= a - 1) or (k - a) % 2 != 0:
                raise ValueError(f"{identity.name} needs 1 <= k <= a-1 with k = a (mod 2), got a={a}, k={k}")
        else:
            if not (1 <= k <= a) or (k - a) % 2 == 0:
                raise ValueError(f"{identity.name} needs 1 <= k <= a with k != a (mod 2), got a={a}, k={k}")
        variant = MatrixVariant.ALMOST_CENTRAL if shifted else MatrixVariant.CENTRAL
        matrix = build_poly_matrix(a, variant, b=free, c=Fraction(-k))
        coeffs = _c_factor_coeffs(a, k, free, shifted)
        return matrix, coeffs

    second = identity in (RowIdentity.B_FACTOR_2, RowIdentity.B_FACTOR_2_HAT)
    shifted = identity in (RowIdentity.B_FACTOR_1_HAT, RowIdentity.B_FACTOR_2_HAT)
    if second:
        if not (0 < k < a - 2) or (k - a) % 2 != 0:
            raise ValueError(f"{identity.name} needs 0 < k < a-2 with k = a (mod 2), got a={a}, k={k}")
    else:
        # k = a-2 admitted: rows a-1 and a of the matrix vanish there outright.
        if not (0 <= k <= a - 2) or (k - a) % 2 != 0:
            raise ValueError(f"{identity.name} needs 0 <= k <= a-2 with k = a (mod 2), got a={a}, k={k}")
    variant = MatrixVariant.ALMOST_CENTRAL if shifted else MatrixVariant.CENTRAL
    matrix = build_poly_matrix(a, variant, b=Fraction(-k), c=free)
    coeffs = _b_factor_coeffs(a, k, free, second, shifted)
    return matrix, coeffs


def check_row_combination(identity: RowIdentity, a: int, k: int, free_param: Rational) -> List[Fraction]:
    """Weighted row sum of the specialized matrix, one value per column j=2..a.

    The expected result is the zero vector, except for the B_FACTOR_2
    variants where it is the negated (k+1)-th matrix row (see
    expected_residual).  A vanishing coefficient denominator raises with
    SINGULAR_MSG; pick a different evaluation point.
    """
    matrix, coeffs = _identity_setup(identity, a, k, free_param)
    residual = [Fraction(0)] * (a - 1)
    for i, coefficient in coeffs.items():
        row = matrix[i - 2]  # rows are indexed 2..a
        for col in range(a - 1):
            residual[col] += coefficient * row[col]
    return residual


def expected_residual(identity: RowIdentity, a: int, k: int, free_param: Rational) -> List[Fraction]:
    """What check_row_combination must return for the identity to hold."""
    matrix, _ = _identity_setup(identity, a, k, free_param)
    if identity in (RowIdentity.B_FACTOR_2, RowIdentity.B_FACTOR_2_HAT):
        return [-entry for entry in matrix[k + 1 - 2]]
    return [Fraction(0)] * (a - 1)


def admissible_k(identity: RowIdentity, a: int) -> List[int]:
    """All k values for which the identity makes a claim at this a."""
    if identity is RowIdentity.C_FACTOR:
        return [k for k in range(1, a + 1) if (k - a) % 2 != 0]
    if identity is RowIdentity.C_FACTOR_HAT:
        return [k for k in range(1, a) if (k - a) % 2 == 0]
    if identity in (RowIdentity.B_FACTOR_1, RowIdentity.B_FACTOR_1_HAT):
        return [k for k in range(0, a - 1) if (k - a) % 2 == 0]
    return [k for k in range(1, a - 2) if (k - a) % 2 == 0]


# ---------------------------------------------------------------------------
# Verification suite: PASS/FAIL records over grids and evaluation points.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    """One verified claim: an identity name, its parameters, and the defect."""

    identity: str
    params: Dict[str, str]
    passed: bool
    residual: str

    def line(self) -> str:
        parts = [self.identity]
        parts.extend(f"{key}={value}" for key, value in self.params.items())
        parts.append("PASS" if self.passed else "FAIL")
        parts.append(f"residual={self.residual}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "pass": self.passed,
            "residual": self.residual,
        }


def degree_bound(a: int) -> int:
    """Upper bound for the determinant's degree in b (equally in c)."""
    return (a + 2) * (a - 1) // 2


def grid_values(a: int) -> range:
    """Integer evaluation grid per axis: covers -6..6 and exceeds the degree bound."""
    return range(-6, -6 + max(13, degree_bound(a) + 2))


def check_factorization(a: int, variant: MatrixVariant, workers: int = 1) -> CheckRecord:
    """Certify det == factored closed form on the full integer grid for one a."""
    rhs = factored_det_central if variant is MatrixVariant.CENTRAL else factored_det_almost_central
    values = grid_values(a)

    def defect_at(b: int) -> Optional[Tuple[int, int, Fraction]]:
        for c in values:
            lhs = det_rational(build_poly_matrix(a, variant, b, c))
            expected = rhs(a, b, c)
            if lhs != expected:
                return b, c, lhs - expected
        return None

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            defects = [d for d in pool.map(defect_at, values) if d is not None]
    else:
        defects = [d for b in values if (d := defect_at(b)) is not None]
    name = "DET_FACTOR_CENTRAL" if variant is MatrixVariant.CENTRAL else "DET_FACTOR_ALMOST_CENTRAL"
    params = {"a": str(a), "grid": f"{values.start}..{values[-1]}"}
    if defects:
        b, c, defect = defects[0]
        return CheckRecord(name, {**params, "point": f"({b},{c})"}, False, str(defect))
    return CheckRecord(name, params, True, "0")


# Non-integer points never make a coefficient denominator vanish (the poles
# sit at integers), so three of these always evaluate.
DEFAULT_POINTS: Tuple[Fraction, ...] = (
    Fraction(5),
    Fraction(13, 2),
    Fraction(23, 3),
    Fraction(9),
    Fraction(7, 2),
)


def check_identity(
    identity: RowIdentity,
    a: int,
    k: int,
    points: Sequence[Rational] = DEFAULT_POINTS,
    required: int = 3,
) -> CheckRecord:
    """Evaluate one row combination at several points, skipping singular ones."""
    evaluated = []
    defect = None
    for point in points:
        if len(evaluated) == required:
            break
        try:
            actual = check_row_combination(identity, a, k, point)
            expected = expected_residual(identity, a, k, point)
        except ValueError as err:
            if SINGULAR_MSG in str(err):
                continue
            raise
        evaluated.append(point)
        if defect is None and actual != expected:
            defect = next(str(got - want) for got, want in zip(actual, expected) if got != want)
    params = {
        "a": str(a),
        "k": str(k),
        "point": "(" + ",".join(str(p) for p in evaluated) + ")",
    }
    if len(evaluated) < required:
        return CheckRecord(identity.name, params, False, "insufficient evaluation points")
    if defect is not None:
        return CheckRecord(identity.name, params, False, defect)
    return CheckRecord(identity.name, params, True, "0")


def run_factor_suite(max_a: int = 6, workers: int = 1) -> List[CheckRecord]:
    """Grid-certify both factorizations and all row combinations up to max_a."""
    records = []
    for a in range(2, max_a + 1):
        for variant in MatrixVariant:
            records.append(check_factorization(a, variant, workers=workers))
    for identity in RowIdentity:
        for a in range(2, max_a + 1):
            for k in admissible_k(identity, a):
                records.append(check_identity(identity, a, k))
    return records

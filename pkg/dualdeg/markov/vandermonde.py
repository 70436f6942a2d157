from fractions import Fraction
from itertools import combinations
from logging import Logger
from math import prod
from typing import Sequence

from sympy import Matrix, Rational

from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.numeric import to_fraction
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def elementary_symmetric(points: Sequence[Fraction], order: int) -> Fraction:
    """e_order(points); e_0 = 1."""
    partial = [Fraction(1)] + [Fraction(0)] * order
    for value in points:
        for j in range(order, 0, -1):
            partial[j] += value * partial[j - 1]
    return partial[order]


def _det(rows: list[list[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    value = Matrix([[Rational(a.numerator, a.denominator) for a in row] for row in rows]).det()
    return Fraction(int(value.p), int(value.q))


def vandermonde_skip_check(points: Sequence, k: int) -> VerificationReport:
    """
    det[x_j^i]_{i ∈ {0..m} \\ {k}} = e_{m−k}(x) · det[x_j^i]_{i < m} for m distinct points.
    """
    values = [to_fraction(p) for p in points]
    m = len(values)
    guards.enforce("max_vandermonde_points", "Vandermonde size", m)
    if len(set(values)) != m:
        logger.error(f"vandermonde_skip_check: repeated points in {values}")
        raise PreconditionError("Vandermonde points must be distinct")
    if not 0 <= k <= m:
        logger.error(f"vandermonde_skip_check: k={k} outside 0..{m}")
        raise PreconditionError(f"k must lie in 0..{m}, got {k}")

    skipped = _det([[x ** i for x in values] for i in range(m + 1) if i != k])
    plain = _det([[x ** i for x in values] for i in range(m)])
    symmetric = elementary_symmetric(values, m - k)
    product_form = prod((b - a for a, b in combinations(values, 2)), start=Fraction(1))

    report = VerificationReport(subject=f"skip-row Vandermonde, m={m}, k={k}", scope="vandermonde_skip")
    report.add("vandermonde_product", "det of the full Vandermonde equals the product of differences",
               plain == product_form, plain, product_form)
    report.add("skip_row_identity", "skipping row k multiplies the determinant by e_{m-k}",
               skipped == symmetric * plain, skipped, symmetric * plain)
    logger.debug(f"{report.subject}: e={symmetric}, det={plain}")
    return report

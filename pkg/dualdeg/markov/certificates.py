"""
Explicit dual solutions for the Chebyshev-node derivative LPs.

At x = 0 (odd n = 2m + 1) the dual constraint matrix is A_ij = (−1)^(j+m) cos^i(jπ/n);
at x = 1 it is B_ij = (−1)^j α_j^i with α_j = cos(jπ/n) − 1 = −2 sin²(jπ/2n) and B_00 = 1.
A nonnegative y with My = k!·e_k bounds the k-th derivative by Σy (weak duality).
"""
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger

from mpmath.ctx_mp import MPContext

from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.markov.chebyshev import chebyshev_deriv_at_one
from dualdeg.markov.elimination import determinant, residuals, solve_dense
from dualdeg.numeric import ap_context, ap_cos_pi_mul, ap_sin_pi_mul, ap_to_hex, factorial, tolerance
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

RESIDUAL_SLACK_BITS = 8
ELIMINATION_GUARD_BITS = 64
# |Σy − T_n^{(k)}(1)| may reach 2^(28 − P/2); the k = 1 certificates get 2^(−P/2)
HIGHER_ABSOLUTE_SLACK_BITS = 28


@dataclass(frozen=True)
class APCertificate:
    n: int
    kind: str
    k: int
    ctx: MPContext
    matrix: list
    rhs: list
    y: list
    residual: object
    dual_value: object
    expected: Fraction
    report: VerificationReport

    @property
    def precision(self) -> int:
        return self.ctx.prec

    @property
    def passed(self) -> bool:
        return self.report.passed

    def y_hex(self) -> list[str]:
        return [ap_to_hex(v, self.ctx) for v in self.y]


def _finish(n: int, kind: str, k: int, ctx: MPContext, matrix: list, rhs: list, y: list,
            expected: Fraction, absolute_slack_bits: int = 0) -> APCertificate:
    """Computes residual and dual value and files the standard checks."""
    report = VerificationReport(subject=f"{kind} certificate, n={n}" + (f", k={k}" if kind == "higher" else ""),
                                scope=f"certificate_{kind}")
    residual = max(residuals(ctx, matrix, y, rhs))
    residual_bound = tolerance(ctx, RESIDUAL_SLACK_BITS - ctx.prec) * n * n
    report.add("residual", "row-relative |My - rhs| stays at rounding level", residual < residual_bound,
               ap_to_hex(residual, ctx), ap_to_hex(residual_bound, ctx))

    dual_value = ctx.fsum(y)
    target = ctx.mpf(expected.numerator) / expected.denominator
    gap = abs(dual_value - target) / max(ctx.mpf(1), abs(target))
    gap_bound = tolerance(ctx, -(ctx.prec // 2))
    report.add("dual_value", "sum of y equals the extremal derivative value", gap < gap_bound,
               ap_to_hex(dual_value, ctx), expected, ap_to_hex(gap_bound, ctx))
    absolute = abs(dual_value - target)
    absolute_bound = tolerance(ctx, absolute_slack_bits - ctx.prec // 2)
    report.add("dual_value_absolute", "|sum of y - extremal value| is below the absolute tolerance",
               absolute < absolute_bound, ap_to_hex(absolute, ctx), expected, ap_to_hex(absolute_bound, ctx))

    smallest = min(y)
    report.add("y_positive", "every dual variable is positive", smallest > gap_bound,
               ap_to_hex(smallest, ctx), ap_to_hex(gap_bound, ctx))
    logger.info(f"{report.subject}: residual {ctx.nstr(residual, 5)}, sum y {ctx.nstr(dual_value, 20)}")
    return APCertificate(n=n, kind=kind, k=k, ctx=ctx, matrix=matrix, rhs=rhs, y=y, residual=residual,
                         dual_value=dual_value, expected=expected, report=report)


def _unit(ctx: MPContext, size: int, index: int, scale: int = 1) -> list:
    return [ctx.mpf(scale) if i == index else ctx.mpf(0) for i in range(size)]


def certificate_at_zero(n: int, precision: int) -> APCertificate:
    """y = (1/n)(1/2, sec²(π/n), …, sec²((n−1)π/n), 1/2) against A; Σy = n."""
    if n < 3 or n % 2 == 0:
        logger.error(f"certificate_at_zero needs an odd n >= 3, got {n}")
        raise PreconditionError(f"the certificate at zero needs an odd n >= 3, got {n}")
    ctx = ap_context(precision)
    m = (n - 1) // 2
    cosines = [ap_cos_pi_mul(j, n, precision, ctx) for j in range(n + 1)]
    matrix = [[(-1) ** (j + m) * cosines[j] ** i for j in range(n + 1)] for i in range(n + 1)]
    half = ctx.mpf(1) / (2 * n)
    y = [half] + [1 / (n * cosines[j] ** 2) for j in range(1, n)] + [half]
    return _finish(n, "at_zero", 1, ctx, matrix, _unit(ctx, n + 1, 1), y, Fraction(n))


def _b_matrix(ctx: MPContext, n: int) -> list:
    # α_j = −2 sin²(jπ/2n) avoids the cancellation in cos(jπ/n) − 1 for small j
    alphas = [-2 * ap_sin_pi_mul(j, 2 * n, ctx.prec, ctx) ** 2 for j in range(n + 1)]
    return [[(-1) ** j * (alphas[j] ** i if i else ctx.mpf(1)) for j in range(n + 1)] for i in range(n + 1)]


def certificate_at_one(n: int, precision: int) -> APCertificate:
    """y = ((2n² + 1)/6, csc²(π/2n), …, csc²((n−1)π/2n), 1/2) against B; Σy = n²."""
    if n < 2:
        logger.error(f"certificate_at_one needs n >= 2, got {n}")
        raise PreconditionError(f"the certificate at one needs n >= 2, got {n}")
    ctx = ap_context(precision)
    matrix = _b_matrix(ctx, n)
    y = [ctx.mpf(2 * n * n + 1) / 6]
    y += [1 / ap_sin_pi_mul(j, 2 * n, precision, ctx) ** 2 for j in range(1, n)]
    y.append(ctx.mpf(1) / 2)
    return _finish(n, "at_one", 1, ctx, matrix, _unit(ctx, n + 1, 1), y, Fraction(n * n))


def higher_certificate(n: int, k: int, precision: int) -> APCertificate:
    """
    Solves By = k!·e_k and checks that the solution is positive, which by
    complementary slackness makes T_n optimal with value T_n^{(k)}(1).

    Also re-derives the sign of one Cramer quotient det(B_j)/det(B).
    """
    if not 1 <= k <= n:
        logger.error(f"higher_certificate: k={k} outside 1..{n}")
        raise PreconditionError(f"k must lie in 1..{n}, got {k}")
    expected = chebyshev_deriv_at_one(n, k)
    # B loses about n bits to conditioning and Σy carries the magnitude of T_n^{(k)}(1)
    work = ap_context(precision + ELIMINATION_GUARD_BITS + expected.numerator.bit_length() + n)
    work_matrix = _b_matrix(work, n)
    work_rhs = _unit(work, n + 1, k, factorial(k))
    work_y = solve_dense(work, work_matrix, work_rhs)

    ctx = ap_context(precision)
    y = [ctx.mpf(v) for v in work_y]
    certificate = _finish(n, "higher", k, ctx, _b_matrix(ctx, n), _unit(ctx, n + 1, k, factorial(k)), y,
                          expected, absolute_slack_bits=HIGHER_ABSOLUTE_SLACK_BITS)

    column = n // 2
    replaced = [row[:column] + [b] + row[column + 1:] for row, b in zip(work_matrix, work_rhs)]
    quotient = ctx.mpf(determinant(work, replaced) / determinant(work, work_matrix))
    agreement = abs(quotient - y[column]) / max(ctx.mpf(1), abs(y[column]))
    certificate.report.add("cramer_sign", f"det(B_j)/det(B) is positive and equals y_j for j={column}",
                           quotient > 0 and agreement < tolerance(ctx, -(ctx.prec // 2)),
                           ap_to_hex(quotient, ctx), ap_to_hex(y[column], ctx))
    return certificate

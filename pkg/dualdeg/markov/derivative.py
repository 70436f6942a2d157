from fractions import Fraction
from logging import Logger

from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.lp import RationalLP, solve
from dualdeg.markov.chebyshev import ChebyshevPoly
from dualdeg.numeric import ap_context, ap_to_hex, to_fraction, tolerance
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def uniform_grid(points: int) -> list[Fraction]:
    """`points` equally spaced rationals from −1 to 1."""
    return [Fraction(2 * j, points - 1) - 1 for j in range(points)]


def derivative_bound_check(n: int, x0, grid: int, precision: int) -> VerificationReport:
    """
    max p'(x0) subject to |p| ≤ 1 on a rational grid, solved exactly.

    The grid LP relaxes the constraint on [−1, 1], so its optimum can only
    exceed the true supremum; the checks are the ones that survive this:
    T_n is feasible, and both scaled bounds dominate |T_n'(x0)|.
    """
    x0 = to_fraction(x0)
    if n < 1:
        raise PreconditionError(f"degree must be positive, got {n}")
    if not -1 < x0 < 1:
        logger.error(f"derivative_bound_check: x0={x0} outside (-1, 1)")
        raise PreconditionError(f"x0 must lie strictly inside (-1, 1), got {x0}")
    if grid < n + 1:
        raise PreconditionError(f"a grid of {grid} points leaves the LP unbounded for degree {n}")

    report = VerificationReport(subject=f"derivative bound, n={n}, x0={x0}, grid={grid}", scope="derivative_bound")
    dense = grid >= 2 * n + 2
    if not dense:
        logger.warning(f"grid of {grid} points is sparser than 2n + 2 = {2 * n + 2}")
    report.add("grid_density", "the grid has at least 2n + 2 points", dense, grid, 2 * n + 2)

    chebyshev = ChebyshevPoly(n)
    extremal = abs(chebyshev.derivative_at(x0, 1))

    lp = RationalLP(objective=tuple(i * x0 ** (i - 1) if i else 0 for i in range(n + 1)), sense="max")
    for point in uniform_grid(grid):
        row = [point ** i for i in range(n + 1)]
        lp.add(row, "<=", 1)
        lp.add(row, ">=", -1)
    solution = solve(lp)
    if not solution.optimal:
        report.add("lp_optimal", "the grid LP has a finite optimum", False, solution.status.value)
        return report
    logger.debug(f"grid LP for n={n}: optimum {solution.objective} after {solution.pivots} pivots")
    report.add("lp_dominates_extremal", "the grid LP optimum is at least |T_n'(x0)|",
               solution.objective >= extremal, solution.objective, extremal)

    scaled = Fraction(n + 1) / (1 - abs(x0))
    if x0:
        scaled = min(scaled, Fraction(n * n) / abs(x0))
    report.add("scaled_bound", "min((n+1)/(1-|x0|), n^2/|x0|) is at least |T_n'(x0)|",
               scaled >= extremal, scaled, extremal)

    # T_n'(cos θ) = n sin(nθ)/sin θ, evaluated independently of the coefficients
    ctx = ap_context(precision)
    theta = ctx.acos(ctx.mpf(x0.numerator) / x0.denominator)
    trig_value = abs(n * ctx.sin(n * theta) / ctx.sin(theta))
    exact = ctx.mpf(extremal.numerator) / extremal.denominator
    gap = abs(trig_value - exact) / max(ctx.mpf(1), exact)
    bound = tolerance(ctx, 8 - precision // 2)
    report.add("trig_form", "n sin(n theta)/sin(theta) reproduces |T_n'(x0)|", gap < bound,
               ap_to_hex(trig_value, ctx), extremal, ap_to_hex(bound, ctx))
    return report

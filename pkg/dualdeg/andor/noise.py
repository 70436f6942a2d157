from fractions import Fraction
from logging import Logger
from typing import Sequence

from dualdeg.boolfn import BoolFn, block_sensitivity_at_index, index_of, weight
from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def flip_probability(f: BoolFn, z_index: int, alpha: Fraction) -> Fraction:
    """P_y[f(z) ≠ f(z ⊙ y)] with every bit of y independently −1 with probability α, exactly."""
    guards.enforce("max_noise_arity", "noise arity", f.n)
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise PreconditionError(f"flip probability must lie in [0, 1], got {alpha}")
    stay = 1 - alpha
    powers_flip = [alpha ** k for k in range(f.n + 1)]
    powers_stay = [stay ** k for k in range(f.n + 1)]
    value = f.table[z_index]
    total = Fraction(0)
    for y in range(1, 1 << f.n):
        if f.table[z_index ^ y] != value:
            k = weight(y)
            total += powers_flip[k] * powers_stay[f.n - k]
    return total


def flip_probability_bound(f: BoolFn, z: Sequence[int] | int, alpha: Fraction) -> VerificationReport:
    """Checks P_y[f(z) ≠ f(z ⊙ y)] ≤ 2α·bs_z(f) by exact enumeration of the 2^n noise patterns."""
    z_index = z if isinstance(z, int) else index_of(z)
    if not 0 <= z_index < 1 << f.n:
        raise PreconditionError(f"point index {z_index} out of range for arity {f.n}")
    alpha = Fraction(alpha)
    probability = flip_probability(f, z_index, alpha)
    bs = block_sensitivity_at_index(f, z_index)
    bound = 2 * alpha * bs

    report = VerificationReport(subject=f"noise at z={z_index} for {f.label}, alpha={alpha}", scope="flip_probability_bound")
    report.add("flip_probability", "P[F(z) != F(z*y)] <= 2*alpha*bs_z(F)", probability <= bound, probability, bound)
    if probability > bound:
        logger.info(f"{report.subject}: probability {probability} exceeds {bound}")
    return report

from fractions import Fraction
from logging import Logger

from dualdeg.boolfn import BoolFn
from dualdeg.checks import VerificationReport
from dualdeg.dualcore.witness import DualWitness
from dualdeg.errors import PreconditionError
from dualdeg.fourier import correlation, l1_norm, pure_high_degree
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def verify_witness(witness: DualWitness, f: BoolFn, d: int, eps: Fraction) -> VerificationReport:
    """
    Recomputes the three dual conditions on φ from scratch.

    Args:
        witness: the candidate signed measure.
        f: the function it claims to certify against.
        d: degree that must be exceeded.
        eps: correlation that must be strictly beaten.

    Returns:
        A report with one check per condition; it passes iff all three hold.
    """
    if witness.n != f.n:
        logger.error(f"verify_witness: witness arity {witness.n} differs from function arity {f.n}")
        raise PreconditionError(f"arity mismatch: witness on {witness.n} bits, function on {f.n}")

    eps = Fraction(eps)
    report = VerificationReport(subject=f"witness for {f.label} at d={d}", scope="verify_witness")
    measured = correlation(witness.phi, f)
    report.add("correlation", "sum of f(x)phi(x) exceeds eps", measured > eps, measured, eps)
    mass = l1_norm(witness.phi)
    report.add("l1", "sum of |phi(x)| equals 1", mass == 1, mass, Fraction(1))
    phd = pure_high_degree(witness.phi) if mass else -1
    report.add("phd", "phi is orthogonal to every character of degree at most d", phd >= d, phd, d)

    if not report.passed:
        logger.info(f"{report.subject}: failed {[check.name for check in report.failures()]}")
    return report

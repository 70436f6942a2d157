"""
The trigonometric sums behind the Chebyshev-node certificates, evaluated in
arbitrary precision for every admissible parameter up to n_max.

Each identity is reported once with its worst relative residual
|lhs − rhs| / max(1, Σ|terms|).
"""
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from typing import Callable, Iterator

from mpmath.ctx_mp import MPContext

from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.numeric import ap_context, ap_cos_pi_mul, ap_sin_pi_mul, ap_to_hex, tolerance
from dualdeg.numeric.apfloat import GUARD_BITS
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

SLACK_BITS = 8
# θ/π for the alternating cosine sum; θ/2 must stay off odd multiples of π/2
ALT_COSINE_ANGLES = (Fraction(0), Fraction(1, 7), Fraction(2, 5), Fraction(1, 3), Fraction(3, 4), Fraction(5, 3))


class _Trig:
    """cos(aπ/b) and sin(aπ/b) memoized for one context."""

    def __init__(self, ctx: MPContext) -> None:
        self.ctx = ctx
        self._cos: dict[tuple[int, int], object] = {}
        self._sin: dict[tuple[int, int], object] = {}

    def cos(self, a: int, b: int):
        key = (a, b)
        if key not in self._cos:
            self._cos[key] = ap_cos_pi_mul(a, b, self.ctx.prec, self.ctx)
        return self._cos[key]

    def sin(self, a: int, b: int):
        key = (a, b)
        if key not in self._sin:
            self._sin[key] = ap_sin_pi_mul(a, b, self.ctx.prec, self.ctx)
        return self._sin[key]


@dataclass(frozen=True)
class Identity:
    name: str
    claim: str
    instances: Callable[[int], Iterator[tuple]]
    sides: Callable[..., tuple[list, object]]


def _alt_cosine(t: _Trig, n: int, angle: Fraction):
    a, b = angle.numerator, angle.denominator
    terms = [(-1) ** j * t.cos(j * a, b) for j in range(n + 1)]
    rhs = t.ctx.mpf(1) / 2 + (-1) ** n * t.cos((2 * n + 1) * a, 2 * b) / (2 * t.cos(a, 2 * b))
    return terms, rhs


def _odd_cosine_powers(t: _Trig, n: int, i: int):
    return [(-1) ** j * t.cos(j, n) ** i for j in range(n + 1)], t.ctx.mpf(1)


def _even_sine_powers(t: _Trig, n: int, i: int):
    return [(-1) ** j * t.sin(j, 2 * n) ** (2 * i) for j in range(n + 1)], t.ctx.mpf((-1) ** n) / 2


def _alternating_sec(t: _Trig, n: int):
    m = (n - 1) // 2
    return [(-1) ** k / t.cos(k, n) for k in range(n + 1)], t.ctx.mpf((-1) ** m * n + 1)


def _sec_squares(t: _Trig, n: int):
    return [1 / t.cos(k, n) ** 2 for k in range(n)], t.ctx.mpf(n * n)


def _csc_squares(t: _Trig, n: int):
    return [1 / t.sin(j, 2 * n) ** 2 for j in range(1, n)], t.ctx.mpf(4 * n * n - 4) / 6


def _odd_csc_squares(t: _Trig, n: int):
    rhs = t.ctx.mpf(n * n) / 2 + t.ctx.mpf((-1) ** n - 1) / 4
    return [1 / t.sin(j, 2 * n) ** 2 for j in range(1, n, 2)], rhs


def _alternating_csc_squares(t: _Trig, n: int):
    rhs = -t.ctx.mpf(n * n) / 3 - t.ctx.mpf(1) / 6 - t.ctx.mpf((-1) ** n) / 2
    return [(-1) ** j / t.sin(j, 2 * n) ** 2 for j in range(1, n)], rhs


def _full_period_csc_squares(t: _Trig, n: int):
    return [1 / t.sin(j, n) ** 2 for j in range(1, n)], t.ctx.mpf(n * n - 1) / 3


def _tan_squares(t: _Trig, n: int):
    return [(t.sin(k, n) / t.cos(k, n)) ** 2 for k in range(n)], t.ctx.mpf(n * (n - 1))


def _half_period_sec(t: _Trig, n: int):
    m = (n - 1) // 2
    return [1 / t.cos(2 * k, n) for k in range(m + 1)], t.ctx.mpf((-1) ** m * n + 1) / 2


def _odd(n_max: int, start: int = 3) -> Iterator[tuple]:
    return ((n,) for n in range(start, n_max + 1) if n % 2)


def _from(n_max: int, start: int) -> Iterator[tuple]:
    return ((n,) for n in range(start, n_max + 1))


IDENTITIES: tuple[Identity, ...] = (
    Identity("alt_cosine", "sum (-1)^j cos(j theta) = 1/2 + (-1)^n cos((n+1/2) theta)/(2 cos(theta/2))",
             lambda n_max: ((n, angle) for n in range(n_max + 1) for angle in ALT_COSINE_ANGLES), _alt_cosine),
    Identity("odd_cosine_powers", "sum_{j=0}^n (-1)^j cos^i(j pi/n) = 1 for odd i < n, n odd",
             lambda n_max: ((n, i) for (n,) in _odd(n_max) for i in range(1, n, 2)), _odd_cosine_powers),
    Identity("even_sine_powers", "sum_{j=0}^n (-1)^j sin^{2i}(j pi/2n) = (-1)^n/2 for 1 <= i, 2i < n",
             lambda n_max: ((n, i) for n in range(3, n_max + 1) for i in range(1, (n + 1) // 2)), _even_sine_powers),
    Identity("alternating_sec", "sum_{k=0}^n (-1)^k sec(k pi/n) = (-1)^m n + 1 for n = 2m + 1",
             lambda n_max: _odd(n_max), _alternating_sec),
    Identity("sec_squares", "sum_{k=0}^{n-1} sec^2(k pi/n) = n^2 for odd n",
             lambda n_max: _odd(n_max, 1), _sec_squares),
    Identity("csc_squares", "sum_{j=1}^{n-1} csc^2(j pi/2n) = (4n^2 - 4)/6",
             lambda n_max: _from(n_max, 2), _csc_squares),
    Identity("odd_csc_squares", "sum over odd j < n of csc^2(j pi/2n) = n^2/2 + ((-1)^n - 1)/4",
             lambda n_max: _from(n_max, 2), _odd_csc_squares),
    Identity("alternating_csc_squares", "sum_{j=1}^{n-1} (-1)^j csc^2(j pi/2n) = -n^2/3 - 1/6 - (-1)^n/2",
             lambda n_max: _from(n_max, 2), _alternating_csc_squares),
    Identity("full_period_csc_squares", "sum_{j=1}^{n-1} csc^2(j pi/n) = (n^2 - 1)/3",
             lambda n_max: _from(n_max, 2), _full_period_csc_squares),
    Identity("tan_squares", "sum_{k=0}^{n-1} tan^2(k pi/n) = n(n - 1) for odd n",
             lambda n_max: _odd(n_max, 1), _tan_squares),
    Identity("half_period_sec", "sum_{k=0}^m sec(2k pi/(2m+1)) = ((-1)^m (2m+1) + 1)/2",
             lambda n_max: _odd(n_max, 1), _half_period_sec),
)


def trig_identity_suite(n_max: int, precision: int) -> VerificationReport:
    """Every identity at every admissible parameter with n ≤ n_max, tolerance 2^(8−P) relative."""
    if n_max < 3:
        logger.error(f"trig_identity_suite: n_max={n_max} is below 3")
        raise PreconditionError(f"n_max must be at least 3, got {n_max}")
    report = VerificationReport(subject=f"trigonometric identities up to n={n_max}", scope="trig_identity")
    ctx = ap_context(precision + GUARD_BITS)
    trig = _Trig(ctx)
    bound = tolerance(ctx, SLACK_BITS - precision)

    for identity in IDENTITIES:
        worst, worst_at, count = ctx.mpf(0), None, 0
        for params in identity.instances(n_max):
            terms, rhs = identity.sides(trig, *params)
            scale = max(ctx.mpf(1), ctx.fsum(abs(term) for term in terms))
            residual = abs(ctx.fsum(terms) - rhs) / scale
            count += 1
            if residual >= worst:
                worst, worst_at = residual, params
        passed = worst < bound
        if not passed:
            logger.info(f"{identity.name}: worst residual {ctx.nstr(worst, 5)} at {worst_at}")
        report.add(identity.name, f"{identity.claim} ({count} instances)", passed,
                   ap_to_hex(worst, ctx), ap_to_hex(bound, ctx))
    logger.info(f"{report.subject}: {sum(c.passed for c in report.checks)}/{len(report.checks)} identities hold")
    return report

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from logging import Logger

from mpmath.ctx_mp import MPContext
from sympy import Poly, Rational, ZZ, chebyshevt_poly, symbols

from dualdeg.errors import PreconditionError
from dualdeg.numeric import ap_cos_pi_mul, to_fraction
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

x = symbols("x")


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def _chebyshev(n: int) -> Poly:
    """T_n by the three-term recurrence T_{k+1} = 2x T_k − T_{k−1}."""
    previous, current = Poly(1, x, domain=ZZ), Poly(x, x, domain=ZZ)
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, Poly(2 * x, x, domain=ZZ) * current - previous
    return current


@dataclass(frozen=True)
class ChebyshevPoly:
    """The degree-n Chebyshev polynomial of the first kind with integer coefficients."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError(f"Chebyshev degree must be nonnegative, got {self.n}")

    @property
    def poly(self) -> Poly:
        return _chebyshev(self.n)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Monomial coefficients, constant term first."""
        return tuple(int(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def shifted_coefficients(self) -> tuple[int, ...]:
        """c_i with T_n(x) = Σ c_i (x − 1)^i."""
        return tuple(int(c) for c in reversed(self.poly.shift(1).all_coeffs()))

    def matches_closed_form(self) -> bool:
        return self.poly == Poly(chebyshevt_poly(self.n, x), x, domain=ZZ)

    def __call__(self, point) -> Fraction:
        return _to_fraction(self.poly.eval(Rational(*_as_pair(point))))

    def derivative_at(self, point, k: int) -> Fraction:
        """T_n^{(k)}(point), exactly."""
        if k < 0:
            raise PreconditionError(f"derivative order must be nonnegative, got {k}")
        derivative = self.poly.diff((x, k)) if k else self.poly
        return _to_fraction(derivative.eval(Rational(*_as_pair(point))))

    def node_values(self, ctx: MPContext) -> list:
        """T_n(cos(jπ/n)) for j = 0..n in `ctx`; these equal (−1)^j."""
        if self.n == 0:
            return [ctx.mpf(1)]
        coefficients = self.coefficients
        values = []
        for j in range(self.n + 1):
            node = ap_cos_pi_mul(j, self.n, ctx.prec, ctx)
            values.append(ctx.polyval(list(reversed(coefficients)), node))
        return values


def _as_pair(point) -> tuple[int, int]:
    value = to_fraction(point)
    return value.numerator, value.denominator


def chebyshev_deriv_at_one(n: int, k: int) -> Fraction:
    """T_n^{(k)}(1), by differentiating the recurrence polynomial k times."""
    if not 0 <= k <= n:
        logger.error(f"chebyshev_deriv_at_one: k={k} outside 0..{n}")
        raise PreconditionError(f"k must lie in 0..{n}, got {k}")
    return ChebyshevPoly(n).derivative_at(1, k)


def chebyshev_deriv_product_form(n: int, k: int) -> Fraction:
    """Π_{j<k} (n² − j²)/(2j + 1)."""
    value = Fraction(1)
    for j in range(k):
        value *= Fraction(n * n - j * j, 2 * j + 1)
    return value

"""
Arbitrary-precision floats on top of mpmath.

Every task gets its own ``MPContext`` whose ``prec`` is the task's P, so the
precision travels with the values instead of living in a global.
"""
import re
from mpmath.ctx_mp import MPContext
from dualdeg.errors import PreconditionError

GUARD_BITS: int = 32
MIN_PRECISION: int = 64

_HEX_TEXT = re.compile(r"^(-?)0x([0-9a-f]+)p(-?\d+)@(\d+)$")


def ap_context(precision: int) -> MPContext:
    """A fresh mpmath context working at `precision` bits."""
    if precision < MIN_PRECISION:
        raise PreconditionError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")
    ctx = MPContext()
    ctx.prec = precision
    return ctx


def tolerance(ctx: MPContext, exponent: int):
    """2**exponent in `ctx`."""
    return ctx.ldexp(ctx.mpf(1), exponent)


def ap_cos_pi_mul(j: int, n: int, precision: int, ctx: MPContext | None = None):
    """
    cos(jπ/n) at `precision` bits.

    The angle is reduced to [0, π/2] with integer arithmetic before any
    rounding happens; multiples of π/2 come out exact.
    """
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    ctx = ctx or ap_context(precision)

    r = j % (2 * n)
    if r > n:
        r = 2 * n - r
    sign = 1
    if 2 * r > n:
        r = n - r
        sign = -1

    if r == 0:
        return ctx.mpf(sign)
    if 2 * r == n:
        return ctx.mpf(0)

    with ctx.workprec(precision + GUARD_BITS):
        value = ctx.cos(ctx.pi * r / n)
    # unary plus rounds back to the context precision
    return +value if sign > 0 else -value


def ap_sin_pi_mul(j: int, n: int, precision: int, ctx: MPContext | None = None):
    """sin(jπ/n) = cos((n − 2j)π/(2n))."""
    return ap_cos_pi_mul(n - 2 * j, 2 * n, precision, ctx)


def ap_to_hex(value, ctx: MPContext) -> str:
    """
    ``[-]0x<significand>p<exponent>@<precision>`` with value = significand · 2^exponent.

    Zero serializes as ``0x0p0@P``.
    """
    precision = ctx.prec
    if value == 0:
        return f"0x0p0@{precision}"
    negative = value < 0
    mantissa, exponent = ctx.frexp(abs(value))
    significand = int(ctx.ldexp(mantissa, precision))
    exponent -= precision
    while significand % 2 == 0:
        significand //= 2
        exponent += 1
    return f"{'-' if negative else ''}0x{significand:x}p{exponent}@{precision}"


def ap_from_hex(text: str):
    """Inverse of :func:`ap_to_hex`; returns ``(ctx, value)``."""
    match = _HEX_TEXT.match(text.strip())
    if match is None:
        raise PreconditionError(f"not an AP hex literal: {text!r}")
    sign, digits, exponent, precision = match.groups()
    ctx = ap_context(int(precision))
    value = ctx.ldexp(ctx.mpf(int(digits, 16)), int(exponent))
    return ctx, (-value if sign else value)

"""
Exact rationals: ``fractions.Fraction`` plus the strict ``p/q`` text form used at every boundary.
"""
import re
from fractions import Fraction
from numbers import Rational
from dualdeg.errors import PreconditionError

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_fraction(value: Rational | int | str) -> Fraction:
    """Coerces ints, Fractions and ``p/q`` strings; floats are refused."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise PreconditionError(f"expected an exact rational, got {type(value).__name__}: {value!r}")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """
    Parses ``"p/q"`` or ``"p"``.

    Decimal notation such as ``"0.3"`` is rejected so that no value crosses
    the boundary with an implied rounding.
    """
    match = _RATIONAL_TEXT.match(text)
    if match is None:
        raise PreconditionError(f"not a rational of the form p/q: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise PreconditionError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction | int) -> str:
    """Always ``num/den``, even for integers, so parsers never guess."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"

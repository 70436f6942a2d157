from .rational import to_fraction, parse_rational, format_rational
from .binomial import BinomialTable, binomial, binomial_int, factorial
from .apfloat import (
    ap_context,
    tolerance,
    ap_cos_pi_mul,
    ap_sin_pi_mul,
    ap_to_hex,
    ap_from_hex,
)

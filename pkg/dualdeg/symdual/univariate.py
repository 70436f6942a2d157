"""
Univariate dual polynomials Q on Hamming levels 0..n.

Every construction has the same shape: a support T ⊆ [n] = {0..n}, a
polynomial P(x) = coef · Π_{j ∈ [n] \\ T} (x − j) of degree n + 1 − |T|,
and Q(i) = (−1)^i P(i), which vanishes off T.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from logging import Logger
from pathlib import Path
from typing import Iterable

from dualdeg.boolfn import SymmetricProfile, weight
from dualdeg.errors import PreconditionError
from dualdeg.fourier import RealCubeFn
from dualdeg.numeric import binomial, factorial, format_rational, parse_rational
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


@dataclass(frozen=True)
class Provenance:
    construction: str
    t: int
    S: tuple[int, ...]
    T: tuple[int, ...]
    i_star: int | None = None
    sign: int = 1
    offset: int = 0
    c: Fraction | None = None
    h: int | None = None
    case: int | None = None
    i_star_before_shift: int | None = None
    dropped: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class UnivariateDual:
    n: int
    values: tuple[Fraction, ...]
    provenance: Provenance

    def __post_init__(self) -> None:
        if len(self.values) != self.n + 1:
            raise PreconditionError(f"{len(self.values)} level values do not match arity {self.n}")

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v)

    @property
    def claimed_phd(self) -> int:
        """|T| − 2: P has degree n + 1 − |T|, so the lift vanishes on levels ≤ |T| − 2."""
        return len(self.provenance.T) - 2

    def mass(self, i: int) -> Fraction:
        """C(n, i)·|Q(i)|, the share of level i in ‖Q‖₁."""
        return binomial(self.n, i) * abs(self.values[i])

    def l1(self) -> Fraction:
        return sum((self.mass(i) for i in range(self.n + 1)), Fraction(0))

    def correlation(self, profile: SymmetricProfile) -> Fraction:
        """Q·F = Σ C(n, i) Q(i) F(i)."""
        if profile.n != self.n:
            raise PreconditionError(f"arity mismatch: dual on {self.n} levels, profile on {profile.n}")
        return sum((binomial(self.n, i) * q * profile[i] for i, q in enumerate(self.values)), Fraction(0))

    def ratio(self, profile: SymmetricProfile) -> Fraction:
        return self.correlation(profile) / self.l1()

    def negated(self) -> "UnivariateDual":
        return UnivariateDual(n=self.n, values=tuple(-v for v in self.values),
                              provenance=replace(self.provenance, sign=-self.provenance.sign))

    def reflected(self) -> "UnivariateDual":
        """i ↦ Q(n − i), the dual for the reflected profile."""
        n = self.n
        provenance = replace(self.provenance,
                             S=tuple(sorted(n - s for s in self.provenance.S)),
                             T=tuple(sorted(n - s for s in self.provenance.T)),
                             i_star=None if self.provenance.i_star is None else n - self.provenance.i_star)
        return UnivariateDual(n=n, values=tuple(reversed(self.values)), provenance=provenance)


def pi_S(S: Iterable[int], i: int) -> Fraction:
    """π_S(i) = Π_{i' ∈ S, i' ≠ i} |i − i'|."""
    points = set(S)
    if i not in points:
        logger.error(f"pi_S evaluated at {i}, which is not in S")
        raise PreconditionError(f"{i} is not a point of S")
    product = 1
    for other in points:
        if other != i:
            product *= abs(i - other)
    return Fraction(product)


def level_values(n: int, T: Iterable[int], coefficient: Fraction) -> tuple[Fraction, ...]:
    """
    Q(i) = (−1)^i · coef · Π_{j ∈ [n] \\ T} (i − j), using
    Π_{j ∈ [n], j ≠ i} (i − j) = (−1)^(n − i) i! (n − i)!.
    """
    support = sorted(set(T))
    if support and (support[0] < 0 or support[-1] > n):
        raise PreconditionError(f"support {support} is not inside [0, {n}]")
    values = [Fraction(0)] * (n + 1)
    for i in support:
        inside = 1
        for j in support:
            if j != i:
                inside *= i - j
        full = (-1) ** (n - i) * factorial(i) * factorial(n - i)
        values[i] = (-1) ** i * coefficient * Fraction(full, inside)
    return tuple(values)


def direct_p_value(n: int, T: Iterable[int], coefficient: Fraction, x: int) -> Fraction:
    """P(x) by multiplying out all n + 1 − |T| linear factors."""
    support = set(T)
    product = Fraction(coefficient)
    for j in range(n + 1):
        if j not in support:
            product *= x - j
    return product


def lift(Q: UnivariateDual) -> RealCubeFn:
    """The symmetric cube function x ↦ Q(|x|)."""
    guards.enforce("max_table_size", "table size", 1 << Q.n)
    return RealCubeFn(n=Q.n, values=tuple(Q.values[weight(x)] for x in range(1 << Q.n)))


def finite_difference_degree(values: list[Fraction]) -> int:
    """Degree of the polynomial interpolating `values` at 0, 1, …; −1 for all zeros."""
    current = list(values)
    degree = -1
    k = 0
    while current:
        if any(current):
            degree = k
        current = [b - a for a, b in zip(current, current[1:])]
        k += 1
    return degree


def structural_phd(Q: UnivariateDual) -> int:
    """n − 1 − deg P with P(i) = (−1)^i Q(i), measured by finite differences."""
    p_values = [(-1) ** i * q for i, q in enumerate(Q.values)]
    degree = finite_difference_degree(p_values)
    if degree < 0:
        logger.error("structural pure high degree of the zero dual requested")
        raise PreconditionError("pure high degree is undefined for the zero function")
    return Q.n - 1 - degree


def write_sym_witness(Q: UnivariateDual, path: str | Path) -> None:
    p = Q.provenance
    header = {
        "n": Q.n,
        "construction": p.construction,
        "t": p.t,
        "i_star": "none" if p.i_star is None else p.i_star,
        "sign": p.sign,
        "offset": p.offset,
        "c": "none" if p.c is None else format_rational(p.c),
        "h": "none" if p.h is None else p.h,
        "case": "none" if p.case is None else p.case,
        "i_star_before_shift": "none" if p.i_star_before_shift is None else p.i_star_before_shift,
        "S": " ".join(str(s) for s in p.S),
        "T": " ".join(str(s) for s in p.T),
        "dropped": " ".join(str(s) for s in p.dropped),
    }
    lines = [f"{key}={value}" for key, value in header.items()]
    lines.append("values")
    lines += [f"{i} {format_rational(q)}" for i, q in enumerate(Q.values) if q]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_sym_witness(path: str | Path) -> UnivariateDual:
    lines = [line.rstrip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]

    def optional(text: str, kind=int):
        return None if text == "none" else kind(text)

    def points(text: str) -> tuple[int, ...]:
        return tuple(int(v) for v in text.split())

    try:
        split = lines.index("values")
        header = dict(line.split("=", 1) for line in lines[:split])
        n = int(header["n"])
        values = [Fraction(0)] * (n + 1)
        for line in lines[split + 1:]:
            index, value = line.split()
            values[int(index)] = parse_rational(value)
        provenance = Provenance(
            construction=header["construction"],
            t=int(header["t"]),
            S=points(header["S"]),
            T=points(header["T"]),
            i_star=optional(header["i_star"]),
            sign=int(header["sign"]),
            offset=int(header["offset"]),
            c=optional(header["c"], parse_rational),
            h=optional(header["h"]),
            case=optional(header["case"]),
            i_star_before_shift=optional(header["i_star_before_shift"]),
            dropped=points(header["dropped"]),
        )
        return UnivariateDual(n=n, values=tuple(values), provenance=provenance)
    except (KeyError, ValueError, IndexError) as error:
        logger.error(f"Malformed symmetric witness file '{path}': {error}")
        raise PreconditionError(f"malformed symmetric witness file '{path}'") from error

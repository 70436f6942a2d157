"""
Exact Fourier analysis on {−1,1}^n.

χ_S(x) = Π_{i∈S} x_i; with the shared index encoding χ_S(x) = (−1)^{|S ∧ x|}
where S and x are bitmasks.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from logging import Logger
from pathlib import Path
from typing import Iterable

from dualdeg.boolfn import BoolFn, weight
from dualdeg.errors import PreconditionError
from dualdeg.numeric import format_rational, parse_rational
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


@dataclass(frozen=True)
class RealCubeFn:
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise PreconditionError(f"{len(self.values)} values do not match arity {self.n}")

    @classmethod
    def of(cls, n: int, values: Iterable) -> "RealCubeFn":
        return cls(n=n, values=tuple(Fraction(v) for v in values))

    def scaled(self, factor) -> "RealCubeFn":
        factor = Fraction(factor)
        return RealCubeFn(n=self.n, values=tuple(v * factor for v in self.values))

    def __getitem__(self, index: int) -> Fraction:
        return self.values[index]


@dataclass(frozen=True)
class FourierSpectrum:
    """Nonzero coefficients only, keyed by subset bitmask."""

    n: int
    coefficients: dict[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, subset: int) -> Fraction:
        return self.coefficients.get(subset, Fraction(0))

    def support(self) -> list[int]:
        return sorted(self.coefficients)


def character(n: int, subset: int) -> RealCubeFn:
    return RealCubeFn(n=n, values=tuple(Fraction(-1 if weight(subset & x) % 2 else 1) for x in range(1 << n)))


def _butterfly(values: list[Fraction], n: int) -> list[Fraction]:
    span = 1
    while span < (1 << n):
        for start in range(0, 1 << n, span << 1):
            for i in range(start, start + span):
                a, b = values[i], values[i + span]
                values[i], values[i + span] = a + b, a - b
        span <<= 1
    return values


def walsh_transform(g: RealCubeFn) -> FourierSpectrum:
    """ĝ(S) = 2^(−n) Σ_x g(x) χ_S(x), exactly."""
    guards.enforce("max_fourier_arity", "Fourier arity", g.n)
    raw = _butterfly(list(g.values), g.n)
    scale = Fraction(1, 1 << g.n)
    return FourierSpectrum(n=g.n, coefficients={s: c * scale for s, c in enumerate(raw) if c})


def inverse_transform(spectrum: FourierSpectrum) -> RealCubeFn:
    guards.enforce("max_fourier_arity", "Fourier arity", spectrum.n)
    dense = [Fraction(0)] * (1 << spectrum.n)
    for subset, coefficient in spectrum.coefficients.items():
        dense[subset] = coefficient
    return RealCubeFn(n=spectrum.n, values=tuple(_butterfly(dense, spectrum.n)))


def pure_high_degree(phi: RealCubeFn) -> int:
    """Largest d with ĝ(S) = 0 for every |S| ≤ d; −1 when ĝ(∅) ≠ 0."""
    spectrum = walsh_transform(phi)
    if not spectrum.coefficients:
        logger.error("pure high degree of the zero function requested")
        raise PreconditionError("pure high degree is undefined for the zero function")
    return min(weight(subset) for subset in spectrum.coefficients) - 1


def level_weights(spectrum: FourierSpectrum) -> list[Fraction]:
    """Σ_{|S|=k} ĝ(S)² for k = 0..n."""
    levels = [Fraction(0)] * (spectrum.n + 1)
    for subset, coefficient in spectrum.coefficients.items():
        levels[weight(subset)] += coefficient * coefficient
    return levels


def correlation(phi: RealCubeFn, f: BoolFn) -> Fraction:
    if phi.n != f.n:
        raise PreconditionError(f"arity mismatch: witness on {phi.n} bits, function on {f.n}")
    return sum((v for v, s in zip(phi.values, f.table) if s == 1), Fraction(0)) - \
        sum((v for v, s in zip(phi.values, f.table) if s == -1), Fraction(0))


def l1_norm(phi: RealCubeFn) -> Fraction:
    return sum((abs(v) for v in phi.values), Fraction(0))


def dump_spectrum(spectrum: FourierSpectrum, path: str | Path | None = None) -> str:
    text = "".join(f"S={subset} c={format_rational(spectrum.coefficients[subset])}\n"
                   for subset in spectrum.support())
    if path is not None:
        Path(path).write_text(f"n={spectrum.n}\n" + text, encoding="utf-8")
    return text


def read_spectrum(path: str | Path) -> FourierSpectrum:
    lines = [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    n = int(lines[0][2:])
    coefficients: dict[int, Fraction] = {}
    for line in lines[1:]:
        subset_part, value_part = line.split()
        coefficients[int(subset_part[2:])] = parse_rational(value_part[2:])
    return FourierSpectrum(n=n, coefficients=coefficients)

"""
ε-approximate degree through the exact primal LP, and optimal dual witnesses through the dual LP.

Primal: minimize ε subject to |f(x) − Σ_{|S|≤d} c_S χ_S(x)| ≤ ε on every x.
Dual:   maximize Σ f(x)φ(x) subject to Σ|φ(x)| = 1 and ⟨φ, χ_S⟩ = 0 for |S| ≤ d,
        with φ split as φ⁺ − φ⁻.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from logging import Logger
from typing import Iterable

from config.settings import Config
from dualdeg.boolfn import BoolFn, SymmetricProfile, is_symmetric, to_profile, weight
from dualdeg.dualcore.witness import DualWitness
from dualdeg.errors import PreconditionError, SolverError
from dualdeg.fourier import RealCubeFn, character, correlation
from dualdeg.lp import RationalLP, solve
from dualdeg.numeric import binomial_int, format_rational
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

ONE_THIRD = Fraction(1, 3)


def low_degree_subsets(n: int, d: int) -> list[int]:
    """Bitmasks S with |S| ≤ d, in increasing mask order."""
    return [subset for subset in range(1 << n) if weight(subset) <= d]


def _chi(subset: int, x: int) -> int:
    return -1 if weight(subset & x) % 2 else 1


def _use_symmetric_reduction(f: BoolFn) -> bool:
    threshold = int(Config.get_config_value("symmetric_reduction_above", 10))
    return f.n > threshold and is_symmetric(f)


def _check_degree(n: int, d: int) -> None:
    if not 0 <= d <= n:
        raise PreconditionError(f"degree d must satisfy 0 <= d <= n, got d={d}, n={n}")


def best_eps(f: BoolFn, d: int) -> Fraction:
    """Exact min ℓ∞ error of a degree-≤d polynomial against f."""
    _check_degree(f.n, d)
    guards.enforce("max_table_size", "table size", 1 << f.n)
    if d == f.n:
        return Fraction(0)
    if _use_symmetric_reduction(f):
        return best_eps_symmetric(to_profile(f), d)
    return _best_eps_full(f, d)


@lru_cache(maxsize=4096)
def _best_eps_full(f: BoolFn, d: int) -> Fraction:
    subsets = low_degree_subsets(f.n, d)
    width = len(subsets) + 1
    lp = RationalLP(objective=(0,) * len(subsets) + (1,), sense="min",
                    nonneg=(False,) * len(subsets) + (True,))
    for x in range(1 << f.n):
        chars = [_chi(subset, x) for subset in subsets]
        lp.add(chars + [1], ">=", f.table[x])
        lp.add(chars + [-1], "<=", f.table[x])
    solution = solve(lp)
    if not solution.optimal:
        raise SolverError(f"primal approximation LP for {f.label} at d={d} returned {solution.status.value}")
    logger.debug(f"best_eps({f.label}, {d}) = {solution.objective} ({width} variables, {solution.pivots} pivots)")
    return solution.objective


@lru_cache(maxsize=4096)
def best_eps_symmetric(profile: SymmetricProfile, d: int) -> Fraction:
    """Same optimum over univariate polynomials in |x|, one constraint pair per Hamming level."""
    _check_degree(profile.n, d)
    if d == profile.n:
        return Fraction(0)
    lp = RationalLP(objective=(0,) * (d + 1) + (1,), sense="min", nonneg=(False,) * (d + 1) + (True,))
    for k in range(profile.n + 1):
        powers = [k ** j for j in range(d + 1)]
        lp.add(powers + [1], ">=", profile[k])
        lp.add(powers + [-1], "<=", profile[k])
    solution = solve(lp)
    if not solution.optimal:
        raise SolverError(f"symmetric approximation LP at d={d} returned {solution.status.value}")
    return solution.objective


def approx_degree(f: BoolFn, eps: Fraction = ONE_THIRD) -> int:
    """Smallest d with best_eps(f, d) ≤ ε, searching upward from 0."""
    eps = Fraction(eps)
    if not 0 <= eps < 1:
        raise PreconditionError(f"eps must satisfy 0 <= eps < 1, got {eps}")
    previous: Fraction | None = None
    for d in range(f.n + 1):
        error = best_eps(f, d)
        if previous is not None and error > previous:
            logger.error(f"best_eps increased from {previous} to {error} at d={d} for {f.label}")
            raise SolverError("best_eps is not monotone in d")
        if error <= eps:
            logger.info(f"deg_{eps}({f.label}) = {d}")
            return d
        previous = error
    return f.n


def degree_profile(f: BoolFn, eps_grid: Iterable[Fraction]) -> dict[Fraction, int]:
    """deg_ε(f) for every ε on the grid; the best_eps column is computed once."""
    errors = [best_eps(f, d) for d in range(f.n + 1)]
    profile = {}
    for eps in sorted(Fraction(e) for e in eps_grid):
        if not 0 <= eps < 1:
            raise PreconditionError(f"eps must satisfy 0 <= eps < 1, got {eps}")
        profile[eps] = next(d for d, error in enumerate(errors) if error <= eps)
    reference = next(d for d, error in enumerate(errors) if error <= ONE_THIRD)
    if reference:
        ratios = {format_rational(eps): format_rational(Fraction(deg, reference)) for eps, deg in profile.items()}
        logger.debug(f"deg_eps/deg_1/3 ratios for {f.label}: {ratios}")
    return profile


def optimal_dual_witness(f: BoolFn, d: int) -> DualWitness:
    """
    A witness from the dual LP; its correlation equals best_eps(f, d) by strong duality.
    """
    if not 0 <= d < f.n:
        logger.error(f"dual witness requested at d={d} for arity {f.n}")
        raise PreconditionError(f"a dual witness needs 0 <= d < n (the dual is infeasible at d = n), got d={d}")
    guards.enforce("max_table_size", "table size", 1 << f.n)

    if _use_symmetric_reduction(f):
        symmetric = symmetric_dual_witness(to_profile(f), d)
        return DualWitness(phi=symmetric.lift(), claimed_phd=d,
                           claimed_correlation=symmetric.correlation, target=f.label)

    size = 1 << f.n
    subsets = low_degree_subsets(f.n, d)
    lp = RationalLP(objective=tuple(f.table) + tuple(-v for v in f.table), sense="max",
                    nonneg=(True,) * (2 * size))
    lp.add((1,) * (2 * size), "=", 1)
    for subset in subsets:
        chars = [_chi(subset, x) for x in range(size)]
        lp.add(chars + [-c for c in chars], "=", 0)
    solution = solve(lp)
    if not solution.optimal:
        raise SolverError(f"dual LP for {f.label} at d={d} returned {solution.status.value}")

    phi = RealCubeFn(n=f.n, values=tuple(p - m for p, m in zip(solution.primal[:size], solution.primal[size:])))
    phi = _normalized(phi, f.n)
    value = correlation(phi, f)
    if value != solution.objective:
        logger.error(f"witness correlation {value} differs from LP optimum {solution.objective}")
        raise SolverError("dual witness lost optimality during normalization")
    logger.debug(f"dual witness for {f.label} at d={d}: correlation {value}")
    return DualWitness(phi=phi, claimed_phd=d, claimed_correlation=value, target=f.label)


def _normalized(phi: RealCubeFn, n: int) -> RealCubeFn:
    """Rescales to ℓ1 = 1; a vertex that cancels completely is replaced by parity."""
    mass = sum((abs(v) for v in phi.values), Fraction(0))
    if mass == 1:
        return phi
    if mass == 0:
        return character(n, (1 << n) - 1).scaled(Fraction(1, 1 << n))
    return phi.scaled(1 / mass)


@dataclass(frozen=True)
class SymmetricWitness:
    """Φ(k) on Hamming levels; the cube witness is x ↦ Φ(|x|)."""

    n: int
    values: tuple[Fraction, ...]
    correlation: Fraction

    def lift(self) -> RealCubeFn:
        guards.enforce("max_table_size", "table size", 1 << self.n)
        return RealCubeFn(n=self.n, values=tuple(self.values[weight(x)] for x in range(1 << self.n)))


def symmetric_dual_witness(profile: SymmetricProfile, d: int) -> SymmetricWitness:
    """Weight-class dual LP: one φ± pair per level, binomially weighted."""
    n = profile.n
    if not 0 <= d < n:
        raise PreconditionError(f"a dual witness needs 0 <= d < n, got d={d}")
    weights = [binomial_int(n, k) for k in range(n + 1)]
    objective = [weights[k] * profile[k] for k in range(n + 1)]
    lp = RationalLP(objective=tuple(objective) + tuple(-v for v in objective), sense="max",
                    nonneg=(True,) * (2 * (n + 1)))
    lp.add(weights + weights, "=", 1)
    for j in range(d + 1):
        row = [weights[k] * k ** j for k in range(n + 1)]
        lp.add(row + [-v for v in row], "=", 0)
    solution = solve(lp)
    if not solution.optimal:
        raise SolverError(f"symmetric dual LP at d={d} returned {solution.status.value}")

    values = [p - m for p, m in zip(solution.primal[:n + 1], solution.primal[n + 1:])]
    mass = sum((w * abs(v) for w, v in zip(weights, values)), Fraction(0))
    if mass == 0:
        values = [Fraction(-1 if k % 2 else 1, 1 << n) for k in range(n + 1)]
    elif mass != 1:
        values = [v / mass for v in values]
    value = sum((w * profile[k] * v for k, (w, v) in enumerate(zip(weights, values))), Fraction(0))
    return SymmetricWitness(n=n, values=tuple(values), correlation=value)

"""
Dual block composition ζ(x_1..x_M) = 2^M Ψ(…, sgñ(ψ(x_i)), …) Π |ψ(x_i)|.

Block i of the composed input occupies bits iN..iN+N−1, matching
make_named("ANDOR") and compose_functions.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from logging import Logger

from dualdeg.boolfn import BoolFn, block_sensitivity, compose_functions, make_named
from dualdeg.checks import VerificationReport
from dualdeg.dualcore import ONE_THIRD, DualWitness, best_eps, optimal_dual_witness
from dualdeg.errors import PreconditionError, SolverError
from dualdeg.fourier import RealCubeFn, correlation, l1_norm, pure_high_degree
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def sgn_tilde(value: Fraction) -> int:
    """sgñ: −1 for negative values, +1 otherwise (zero included)."""
    return -1 if value < 0 else 1


@dataclass(frozen=True)
class ComponentWitnesses:
    outer: DualWitness
    inner: DualWitness
    eps: Fraction
    delta: Fraction
    d: int
    d_inner: int
    inner_degree_fallback: bool


@dataclass(frozen=True)
class ComposedWitness:
    zeta: RealCubeFn
    outer: DualWitness
    inner: DualWitness
    M: int
    N: int
    outer_fn: BoolFn
    inner_fn: BoolFn
    target_fn: BoolFn
    eps: Fraction
    delta: Fraction

    @property
    def d(self) -> int:
        return self.outer.claimed_phd

    @property
    def d_inner(self) -> int:
        return self.inner.claimed_phd

    @property
    def claimed_phd(self) -> int:
        return self.d * self.d_inner


@dataclass(frozen=True)
class DisagreementSets:
    """A_1 = {ψ ≥ 0, f = −1} and A_{−1} = {ψ < 0, f = 1}, as sorted indices."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    plus_mass: Fraction
    minus_mass: Fraction

    @property
    def mass(self) -> Fraction:
        return self.plus_mass + self.minus_mass

    def mass_for(self, sign: int) -> Fraction:
        return self.plus_mass if sign == 1 else self.minus_mass


def disagreement_sets(psi: RealCubeFn, f: BoolFn) -> DisagreementSets:
    if psi.n != f.n:
        raise PreconditionError(f"arity mismatch: witness on {psi.n} bits, function on {f.n}")
    plus = tuple(x for x in range(1 << f.n) if psi[x] >= 0 and f.table[x] == -1)
    minus = tuple(x for x in range(1 << f.n) if psi[x] < 0 and f.table[x] == 1)
    return DisagreementSets(
        plus=plus,
        minus=minus,
        plus_mass=sum((abs(psi[x]) for x in plus), Fraction(0)),
        minus_mass=sum((abs(psi[x]) for x in minus), Fraction(0)),
    )


def one_sided(psi: RealCubeFn, f: BoolFn) -> bool:
    """True when ψ is negative only where f is true, i.e. A_{−1} is empty."""
    return not disagreement_sets(psi, f).minus


def find_component_witnesses(M: int, N: int) -> ComponentWitnesses:
    """
    Picks (d, d') maximizing d·d' with ε(d) > 1/3 for AND_M and δ(d') < (ε − 1/3)/4 for OR_N.

    δ(0) is always 0 for OR_N, so a pair exists whenever some ε(d) > 1/3.
    Ties prefer the larger d, then the larger d'.
    """
    outer_fn = make_named("AND", n=M)
    inner_fn = make_named("OR", n=N)

    best: tuple[int, int, int] | None = None
    chosen: tuple[Fraction, Fraction] | None = None
    for d in range(M):
        eps = best_eps(outer_fn, d)
        if eps <= ONE_THIRD:
            continue
        for d_inner in range(N):
            delta = 1 - best_eps(inner_fn, d_inner)
            if delta < (eps - ONE_THIRD) / 4:
                key = (d * d_inner, d, d_inner)
                if best is None or key > best:
                    best, chosen = key, (eps, delta)
    if best is None:
        logger.error(f"no admissible outer degree for AND_{M}: eps(0) <= 1/3")
        raise SolverError(f"no admissible witness pair for M={M}, N={N}")

    _, d, d_inner = best
    eps, delta = chosen
    fallback = d_inner == 0
    if fallback:
        logger.warning(f"N={N}: no inner degree d' > 0 meets delta < (eps - 1/3)/4; using d' = 0")
    logger.info(f"component witnesses for M={M}, N={N}: d={d}, d'={d_inner}, eps={eps}, delta={delta}")
    return ComponentWitnesses(
        outer=optimal_dual_witness(outer_fn, d),
        inner=optimal_dual_witness(inner_fn, d_inner),
        eps=eps,
        delta=delta,
        d=d,
        d_inner=d_inner,
        inner_degree_fallback=fallback,
    )


def compose(outer: DualWitness, inner: DualWitness, M: int, N: int,
            outer_fn: BoolFn | None = None, inner_fn: BoolFn | None = None) -> ComposedWitness:
    """
    Builds ζ pointwise and confirms ℓ1(ζ) = 1.

    The outer function defaults to AND_M and the inner one to OR_N; any pair
    of functions with matching arities is accepted.
    """
    if outer.n != M or inner.n != N:
        raise PreconditionError(f"witness arities ({outer.n}, {inner.n}) do not match (M, N) = ({M}, {N})")
    guards.enforce("max_composition_arity", "composed arity MN", M * N)
    guards.enforce("max_table_size", "table size", 1 << (M * N))
    outer_fn = outer_fn or make_named("AND", n=M)
    inner_fn = inner_fn or make_named("OR", n=N)
    if outer_fn.n != M or inner_fn.n != N:
        raise PreconditionError("component functions do not match (M, N)")

    psi = inner.phi
    if sum(psi.values) != 0 or l1_norm(psi) != 1 or l1_norm(outer.phi) != 1:
        logger.error("inner witness must have mean zero and both witnesses unit l1 mass")
        raise PreconditionError("component witnesses are not normalized dual witnesses")

    sign_bits = [1 if sgn_tilde(v) == -1 else 0 for v in psi.values]
    magnitudes = [abs(v) for v in psi.values]
    scale = 1 << M
    values = [Fraction(0)] * (1 << (M * N))
    for blocks in product(range(1 << N), repeat=M):
        index, z, mass = 0, 0, Fraction(scale)
        for i, block in enumerate(blocks):
            index |= block << (i * N)
            z |= sign_bits[block] << i
            mass *= magnitudes[block]
            if not mass:
                break
        if mass:
            values[index] = outer.phi[z] * mass
    zeta = RealCubeFn(n=M * N, values=tuple(values))

    total = l1_norm(zeta)
    if total != 1:
        logger.error(f"composed witness has l1 mass {total}")
        raise SolverError("composed witness does not have unit l1 mass")

    composed = ComposedWitness(
        zeta=zeta, outer=outer, inner=inner, M=M, N=N,
        outer_fn=outer_fn, inner_fn=inner_fn, target_fn=compose_functions(outer_fn, inner_fn),
        eps=correlation(outer.phi, outer_fn), delta=1 - correlation(psi, inner_fn),
    )
    logger.debug(f"composed {outer_fn.label} with {inner_fn.label}: eps={composed.eps}, delta={composed.delta}")
    return composed


def noise_model_correlation(c: ComposedWitness) -> Fraction:
    """
    Σ_z Ψ(z)·E_y[F(z ⊙ y)] where bit i of y is −1 with probability 2·mass(A_{z_i}).

    Equal to ⟨ζ, F(f, …, f)⟩ exactly; the sum runs over 4^M (z, y) pairs.
    """
    guards.enforce("max_noise_arity", "noise arity", c.M)
    sets = disagreement_sets(c.inner.phi, c.inner_fn)
    flip = {sign: 2 * sets.mass_for(sign) for sign in (1, -1)}
    total = Fraction(0)
    for z in range(1 << c.M):
        weight_z = c.outer.phi[z]
        if not weight_z:
            continue
        rates = [flip[-1 if (z >> i) & 1 else 1] for i in range(c.M)]
        expected = Fraction(0)
        for y in range(1 << c.M):
            probability = Fraction(1)
            for i, rate in enumerate(rates):
                probability *= rate if (y >> i) & 1 else 1 - rate
            if probability:
                expected += probability * c.outer_fn.table[z ^ y]
        total += weight_z * expected
    return total


def verify_composition(c: ComposedWitness) -> VerificationReport:
    report = VerificationReport(subject=f"{c.outer_fn.label} composed with {c.inner_fn.label}", scope="verify_composition")
    measured = correlation(c.zeta, c.target_fn)
    mass = l1_norm(c.zeta)
    report.add("l1", "sum of |zeta| equals 1", mass == 1, mass, Fraction(1))

    phd = pure_high_degree(c.zeta)
    report.add("phd", "zeta is orthogonal to every character of degree at most d*d'",
               phd >= c.claimed_phd, phd, c.claimed_phd)

    bs = block_sensitivity(c.outer_fn)
    floor = c.eps - 4 * c.delta * bs
    report.add("noise_bound", "correlation is at least eps - 4*delta*bs(F)", measured >= floor, measured, floor)

    sets = disagreement_sets(c.inner.phi, c.inner_fn)
    report.add("disagreement_mass", "psi-mass of A_1 and A_-1 equals delta/2",
               sets.mass == c.delta / 2, sets.mass, c.delta / 2)

    if c.M <= guards.limit("max_noise_arity"):
        model = noise_model_correlation(c)
        report.add("noise_model", "correlation equals the outer witness under sign noise",
                   model == measured, measured, model)

    if c.outer_fn.family == "AND" and c.inner_fn.family == "OR":
        report.add("inner_one_sided", "psi < 0 only where OR is true", not sets.minus,
                   len(sets.minus), 0)
        sharp = c.eps - 4 * c.delta
        report.add("one_sided_bound", "correlation is at least eps - 4*delta", measured >= sharp, measured, sharp)
        if sharp > ONE_THIRD:
            report.add("beats_one_third", "correlation with AND-OR exceeds 1/3",
                       measured > ONE_THIRD, measured, ONE_THIRD)

    logger.info(f"{report.subject}: correlation {measured}, phd {phd}, passed={report.passed}")
    return report


def check_facts(outer: DualWitness, inner: DualWitness,
                outer_fn: BoolFn | None = None, inner_fn: BoolFn | None = None) -> VerificationReport:
    """ψ(1_N) = (1 − δ)/2 and Ψ(−1_M) = −ε/2 for mean-zero witnesses of OR_N and AND_M."""
    outer_fn = outer_fn or make_named("AND", n=outer.n)
    inner_fn = inner_fn or make_named("OR", n=inner.n)
    eps = correlation(outer.phi, outer_fn)
    delta = 1 - correlation(inner.phi, inner_fn)
    all_true = (1 << outer.n) - 1

    report = VerificationReport(subject=f"facts for {outer_fn.label} and {inner_fn.label}", scope="check_facts")
    report.add("inner_mean_zero", "sum of psi is 0", sum(inner.phi.values) == 0, sum(inner.phi.values), 0)
    report.add("outer_mean_zero", "sum of Psi is 0", sum(outer.phi.values) == 0, sum(outer.phi.values), 0)
    report.add("inner_at_all_false", "psi(1_N) equals (1 - delta)/2",
               inner.phi[0] == (1 - delta) / 2, inner.phi[0], (1 - delta) / 2)
    report.add("outer_at_all_true", "Psi(-1_M) equals -eps/2",
               outer.phi[all_true] == -eps / 2, outer.phi[all_true], -eps / 2)
    return report

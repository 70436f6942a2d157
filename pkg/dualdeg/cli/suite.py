"""
The acceptance runner behind `dualdeg suite`.

Thresholds and ranges come from the versioned table in data/acceptance.json.
Every family of checks is folded into one report section whose checks count
failures, so the report size does not grow with the ranges.
"""
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from pathlib import Path
from typing import Callable

from config.settings import Config
from dualdeg.andor import check_facts, compose, find_component_witnesses, flip_probability_bound, verify_composition
from dualdeg.boolfn import all_boolfns, make_named, random_boolfn, threshold_profile
from dualdeg.checks import VerificationReport
from dualdeg.cli.config import RunConfig
from dualdeg.dualcore import approx_degree, best_eps, optimal_dual_witness, verify_witness
from dualdeg.errors import PreconditionError
from dualdeg.markov import (
    APCertificate,
    certificate_at_one,
    certificate_at_zero,
    higher_certificate,
    trig_identity_suite,
    vandermonde_skip_check,
)
from dualdeg.numeric import ap_to_hex, parse_rational, tolerance
from dualdeg.symdual import (
    dual_for_profile,
    general_sym_dual,
    maj_dual,
    spalek_or_dual,
    verify_construction,
    verify_sym_witness,
)
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

PROJECT_ROOT: Path = Path(__file__).resolve().parents[2]


@dataclass(frozen=True)
class Thresholds:
    and2_degree: int
    and2_best_eps: Fraction
    one_third: Fraction
    duality_slack: Fraction
    maj_ratio: Fraction
    general_ratio: Fraction
    general_tail: Fraction
    spalek_ratio: Fraction


@dataclass(frozen=True)
class Ranges:
    random_n3: int
    composition: tuple[tuple[int, int], ...]
    noise_alphas: tuple[Fraction, ...]
    noise_and_max: int
    noise_random: int
    noise_random_arity: int
    maj_middle_max: int
    maj_all_max: int
    general_max: int
    spalek_max: int
    lift_max: int
    zero_max: int
    one_max: int
    higher_max: int
    vandermonde_max: int
    trig_max: int


@dataclass(frozen=True)
class Acceptance:
    thresholds: Thresholds
    full: Ranges
    quick: Ranges

    def ranges(self, quick: bool) -> Ranges:
        return self.quick if quick else self.full


def _ranges(data: dict) -> Ranges:
    values = dict(data)
    values["composition"] = tuple((int(M), int(N)) for M, N in data["composition"])
    values["noise_alphas"] = tuple(parse_rational(alpha) for alpha in data["noise_alphas"])
    return Ranges(**values)


def load_acceptance(path: str | Path | None = None) -> Acceptance:
    """
    Load the acceptance table from file
    """
    file_path = Path(path or Config.get_config_value(key="acceptance_path", default="dualdeg/data/acceptance.json"))
    if not file_path.is_absolute():
        file_path = PROJECT_ROOT / file_path
    try:
        with open(file_path, "r", encoding="utf-8") as file:
            data = json.load(file)
        raw = data["thresholds"]
        thresholds = Thresholds(
            and2_degree=int(raw["and2_degree"]),
            **{key: parse_rational(str(value)) for key, value in raw.items() if key != "and2_degree"},
        )
        return Acceptance(thresholds=thresholds, full=_ranges(data["ranges"]["full"]),
                          quick=_ranges(data["ranges"]["quick"]))
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as e:
        logger.error(f"Could not load the acceptance table from {file_path}: {e}")
        raise PreconditionError(f"unreadable acceptance table {file_path}: {e}") from e


def _rng(config: RunConfig, stream: str) -> random.Random:
    """One generator per criterion, so widening one range leaves the others' draws alone."""
    return random.Random(f"{config.random_seed}:{stream}")


def _count(report: VerificationReport, name: str, claim: str, failures: list, total: int) -> None:
    report.add(name, f"{claim} ({total} cases)", not failures, len(failures), 0)
    if failures:
        logger.info(f"{report.subject}: {name} fails at {failures[:5]}")


def lp_duality(config: RunConfig, acceptance: Acceptance, ranges: Ranges) -> VerificationReport:
    """Strong duality and witness validity for every d < n on all functions of n ≤ 2 and random ones at n = 3."""
    report = VerificationReport(subject="LP duality on small cubes", scope="suite.lp_duality")
    rng = _rng(config, "duality")
    slack = acceptance.thresholds.duality_slack
    families = {1: list(all_boolfns(1)), 2: list(all_boolfns(2)),
                3: [random_boolfn(3, rng) for _ in range(ranges.random_n3)]}
    for n, functions in families.items():
        mismatched, rejected, total = [], [], 0
        for index, f in enumerate(functions):
            for d in range(n):
                total += 1
                eps = best_eps(f, d)
                witness = optimal_dual_witness(f, d)
                if witness.claimed_correlation != eps:
                    mismatched.append((index, d))
                if not verify_witness(witness, f, d, eps - slack).passed:
                    rejected.append((index, d))
        _count(report, f"strong_duality_n{n}", "the dual witness correlation equals best_eps", mismatched, total)
        _count(report, f"witness_verified_n{n}", "verify_witness accepts the dual witness", rejected, total)
    return report


def and2_sanity(acceptance: Acceptance) -> VerificationReport:
    thresholds = acceptance.thresholds
    report = VerificationReport(subject="approximate degree of AND_2", scope="suite.and2")
    and2 = make_named("AND", n=2)
    degree = approx_degree(and2, thresholds.one_third)
    report.add("and2_degree", "deg_1/3(AND_2) = 2", degree == thresholds.and2_degree, degree, thresholds.and2_degree)
    error = best_eps(and2, 1)
    report.add("and2_best_eps", "best_eps(AND_2, 1) = 1/2", error == thresholds.and2_best_eps,
               error, thresholds.and2_best_eps)
    return report


def composition(ranges: Ranges) -> list[VerificationReport]:
    sections = []
    for M, N in ranges.composition:
        components = find_component_witnesses(M, N)
        report = verify_composition(compose(components.outer, components.inner, M, N))
        report.extend(check_facts(components.outer, components.inner), prefix="facts_")
        sections.append(report)
    return sections


def noise(config: RunConfig, ranges: Ranges) -> VerificationReport:
    """Flip probability against 2α·bs_z over every z, for AND_m and random functions."""
    report = VerificationReport(subject="sign noise against block sensitivity", scope="suite.noise")
    rng = _rng(config, "noise")
    functions = [make_named("AND", n=m) for m in range(1, ranges.noise_and_max + 1)]
    functions += [random_boolfn(rng.randint(1, ranges.noise_random_arity), rng) for _ in range(ranges.noise_random)]
    for alpha in ranges.noise_alphas:
        failures, total = [], 0
        for index, f in enumerate(functions):
            for z in range(1 << f.n):
                total += 1
                if not flip_probability_bound(f, z, alpha).passed:
                    failures.append((index, z))
        _count(report, f"flip_probability_alpha_{alpha.numerator}_{alpha.denominator}",
               f"P[F(z) != F(z*y)] <= 2*alpha*bs_z(F) at alpha={alpha}", failures, total)
    return report


def _worst_ratio(report: VerificationReport, name: str, claim: str, cases, bound: Fraction, strict: bool) -> None:
    worst, worst_at = None, None
    for n, t, build in cases:
        ratio = build().ratio(threshold_profile(n, t))
        if worst is None or ratio < worst:
            worst, worst_at = ratio, (n, t)
    passed = worst is not None and (worst > bound if strict else worst >= bound)
    report.add(name, claim, passed, worst, bound)
    logger.debug(f"{report.subject}: smallest {name} {worst} at (n, t) = {worst_at}")


def symmetric(acceptance: Acceptance, ranges: Ranges) -> VerificationReport:
    thresholds = acceptance.thresholds
    report = VerificationReport(subject="explicit symmetric dual witnesses", scope="suite.symmetric")

    middle = [(n, (n + 1) // 2, lambda n=n: maj_dual(n, (n + 1) // 2)) for n in range(4, ranges.maj_middle_max + 1)]
    _worst_ratio(report, "maj_middle_ratio", "maj witness ratio exceeds 3/13 at t = ceil(n/2)",
                 middle, thresholds.maj_ratio, strict=True)
    spread = [(n, t, lambda n=n, t=t: maj_dual(n, t))
              for n in range(2, ranges.maj_all_max + 1) for t in range(1, n // 2 + 1)]
    _worst_ratio(report, "maj_all_ratio", "maj witness ratio exceeds 3/13 for 1 <= t <= n/2",
                 spread, thresholds.maj_ratio, strict=True)

    general = [(n, t) for n in range(8, ranges.general_max + 1) for t in range(2, n // 4 + 1)]
    _worst_ratio(report, "general_ratio", "interlaced-squares witness ratio is at least 1/14",
                 [(n, t, lambda n=n, t=t: general_sym_dual(n, t)) for n, t in general],
                 thresholds.general_ratio, strict=False)
    worst_tail = max(verify_construction(general_sym_dual(n, t)).get("tail").measured for n, t in general)
    report.add("general_tail", "the interlaced-squares tail mass is at most 2/5",
               worst_tail <= thresholds.general_tail, worst_tail, thresholds.general_tail)

    squares = [(n, 1, lambda n=n: spalek_or_dual(n)) for n in range(4, ranges.spalek_max + 1)]
    _worst_ratio(report, "spalek_ratio", "perfect-square OR witness ratio is at least 1/14",
                 squares, thresholds.spalek_ratio, strict=False)

    disagreements, total = [], 0
    for n in range(2, ranges.lift_max + 1):
        for t in range(1, n + 1):
            profile = threshold_profile(n, t)
            Q = dual_for_profile(profile)
            total += 1
            if not verify_sym_witness(Q, profile, Q.claimed_phd, Fraction(0)).passed:
                disagreements.append((n, t))
    _count(report, "lifted_phd_agreement", "lifted and structural pure high degree agree at the claimed value",
           disagreements, total)
    return report


def run_tolerance_check(report: VerificationReport, certificate: APCertificate, exponent: int) -> bool:
    """Residual below the run's 2^tol_exp, filed on `report`."""
    ctx = certificate.ctx
    bound = tolerance(ctx, exponent)
    passed = certificate.residual < bound
    report.add("run_tolerance", f"residual is below 2^{exponent}", passed,
               ap_to_hex(certificate.residual, ctx), ap_to_hex(bound, ctx))
    return passed


def _certificates(report: VerificationReport, name: str, claim: str, build: Callable[..., APCertificate],
                  cases: list[tuple], exponent: int) -> None:
    failures = []
    scratch = VerificationReport(subject=name)
    for case in cases:
        certificate = build(*case)
        if not (certificate.passed and run_tolerance_check(scratch, certificate, exponent)):
            failures.append(case)
    _count(report, name, claim, failures, len(cases))


def markov(config: RunConfig, ranges: Ranges) -> VerificationReport:
    report = VerificationReport(subject=f"Markov certificates at {config.precision} bits", scope="suite.markov")
    P, exponent = config.precision, config.tolerance_exponent
    _certificates(report, "at_zero", "sum of y is n with a positive solution at x = 0",
                  lambda n: certificate_at_zero(n, P), [(n,) for n in range(3, ranges.zero_max + 1, 2)], exponent)
    _certificates(report, "at_one", "sum of y is n^2 with a positive solution at x = 1",
                  lambda n: certificate_at_one(n, P), [(n,) for n in range(2, ranges.one_max + 1)], exponent)
    _certificates(report, "higher", "sum of y is T_n^(k)(1) with a positive solution",
                  lambda n, k: higher_certificate(n, k, P),
                  [(n, k) for n in range(2, ranges.higher_max + 1) for k in range(1, n + 1)], exponent)

    rng = _rng(config, "vandermonde")
    failures, total = [], 0
    for m in range(1, ranges.vandermonde_max + 1):
        points: set[Fraction] = set()
        while len(points) < m:
            points.add(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        for k in range(m + 1):
            total += 1
            if not vandermonde_skip_check(sorted(points), k).passed:
                failures.append((m, k))
    _count(report, "vandermonde_skip_row", "the skip-row determinant is e_(m-k) times the Vandermonde product",
           failures, total)
    return report


def run_suite(config: RunConfig, quick: bool = False, acceptance: Acceptance | None = None) -> list[VerificationReport]:
    """All acceptance families in a fixed order; `quick` swaps in the reduced ranges."""
    acceptance = acceptance or load_acceptance()
    ranges = acceptance.ranges(quick)
    logger.info(f"Running the {'quick' if quick else 'full'} acceptance suite at {config.precision} bits")

    sections = [lp_duality(config, acceptance, ranges), and2_sanity(acceptance)]
    sections += composition(ranges)
    sections += [
        noise(config, ranges),
        symmetric(acceptance, ranges),
        markov(config, ranges),
        trig_identity_suite(ranges.trig_max, config.precision),
    ]
    failed = [section.subject for section in sections if not section.passed]
    if failed:
        logger.warning(f"Acceptance suite: {len(failed)} sections failed: {failed}")
    else:
        logger.info(f"Acceptance suite: all {len(sections)} sections passed")
    return sections

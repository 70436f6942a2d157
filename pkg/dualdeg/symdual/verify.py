from fractions import Fraction
from logging import Logger
from math import isqrt

from dualdeg.boolfn import SymmetricProfile, reflect_profile, threshold_profile
from dualdeg.checks import VerificationReport
from dualdeg.errors import PreconditionError
from dualdeg.fourier import pure_high_degree
from dualdeg.numeric import ap_context, ap_to_hex, binomial, factorial
from dualdeg.symdual.univariate import UnivariateDual, direct_p_value, lift, pi_S, structural_phd
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

LIFT_CHECK_ARITY = 12
TAIL_BOUND = Fraction(2, 5)
MAJ_TAIL_BOUND = Fraction(1, 4)
MAJ_L1_BOUND = Fraction(13, 4)


def verify_sym_witness(Q: UnivariateDual, profile: SymmetricProfile, d_claim: int,
                       eps: Fraction) -> VerificationReport:
    """
    Checks (Q·F)/‖Q‖₁ > ε and the claimed pure high degree, structurally
    by finite differences and, for n ≤ 12, on the lifted cube function.
    """
    if profile.n != Q.n:
        logger.error(f"verify_sym_witness: dual on {Q.n} levels, profile on {profile.n}")
        raise PreconditionError(f"arity mismatch: dual on {Q.n} levels, profile on {profile.n}")
    eps = Fraction(eps)
    report = VerificationReport(subject=f"{Q.provenance.construction} dual, n={Q.n}, t={Q.provenance.t}", scope="verify_sym_witness")

    mass = Q.l1()
    report.add("l1_positive", "the binomially weighted l1 mass of Q is positive", mass > 0, mass, 0)
    if mass == 0:
        return report

    ratio = Q.correlation(profile) / mass
    report.add("ratio", "(Q.F)/|Q|_1 exceeds eps", ratio > eps, ratio, eps)

    structural = structural_phd(Q)
    report.add("structural_phd", "(-1)^i Q(i) is a polynomial of degree at most n - 1 - d",
               structural >= d_claim, structural, d_claim)

    if Q.n <= LIFT_CHECK_ARITY:
        lifted = pure_high_degree(lift(Q))
        report.add("lifted_phd", "the lift to the cube is orthogonal to every character of degree at most d",
                   lifted >= d_claim, lifted, d_claim)
        report.add("phd_agreement", "structural and lifted pure high degree coincide",
                   lifted == structural, lifted, structural)

    logger.info(f"{report.subject}: ratio {ratio}, phd {structural}, passed={report.passed}")
    return report


def _masses(Q: UnivariateDual) -> dict[int, Fraction]:
    return {i: Q.mass(i) for i in Q.provenance.T}


def verify_construction(Q: UnivariateDual, profile: SymmetricProfile | None = None) -> VerificationReport:
    """
    The bookkeeping facts each construction is built around, recomputed from the values.

    `profile` is the function the witness was oriented against; the sign check of
    the majority construction defaults to the threshold profile at t, reflected
    along with a reflected witness.
    """
    p = Q.provenance
    if profile is not None and profile.n != Q.n:
        logger.error(f"verify_construction: dual on {Q.n} levels, profile on {profile.n}")
        raise PreconditionError(f"arity mismatch: dual on {Q.n} levels, profile on {profile.n}")
    report = VerificationReport(subject=f"{p.construction} construction, n={Q.n}, t={p.t}", scope=f"verify_construction.{p.construction}")
    masses = _masses(Q)

    if p.construction == "spalek":
        coefficient = Fraction(1, factorial(Q.n))
        identity = all(
            binomial(Q.n, s) * abs(direct_p_value(Q.n, p.S, coefficient, s)) == 1 / pi_S(p.S, s) for s in p.S
        )
        report.add("mass_identity", "C(n,k^2)|R(k^2)| = 1/pi_S(k^2) for every square", identity)
        # a reflected witness is anchored at level n and pairs with OR(n - i)
        end = 0 if 0 in p.S else Q.n
        or_profile = threshold_profile(Q.n, 1)
        if end:
            or_profile = reflect_profile(or_profile)
        or_value = Q.correlation(or_profile)
        report.add("or_correlation", "Q.OR equals 2Q(0)", or_value == 2 * Q[end], or_value, 2 * Q[end])
        return report

    anchor = p.i_star
    coefficient = pi_S(p.T, anchor) / factorial(Q.n)
    normalization = binomial(Q.n, anchor) * abs(direct_p_value(Q.n, p.T, coefficient, anchor))
    report.add("normalization", "C(n,i*)|P(i*)| equals 1", normalization == 1, normalization, Fraction(1))

    if p.construction == "maj":
        below, above = masses[anchor - 1], masses[anchor + 1]
        report.add("neighbors_equal", "the masses at t-1 and t+1 coincide", below == above, below, above)
        report.add("neighbors_below_one", "the mass at t-1 is below 1", below < 1, below, Fraction(1))
        tail = sum((masses[s] for s in p.S if s != anchor), Fraction(0))
        report.add("tail", "the mass of S without t is below 1/4", tail < MAJ_TAIL_BOUND, tail, MAJ_TAIL_BOUND)
        total = Q.l1()
        report.add("l1_bound", "|P|_1 is at most 3 + 1/4", total <= MAJ_L1_BOUND, total, MAJ_L1_BOUND)

        # the jump sits between t - 1 and t, or between n - t and n - t + 1 once reflected
        if profile is None:
            reflected = anchor != p.t
            profile = reflect_profile(threshold_profile(Q.n, p.t)) if reflected else threshold_profile(Q.n, p.t)
        else:
            reflected = profile.values[anchor - 1] == profile.values[anchor]
        neighbor = anchor + 1 if reflected else anchor - 1
        signs = [1 if Q[i] > 0 else -1 for i in (neighbor, anchor)]
        wanted = [profile.values[neighbor], profile.values[anchor]]
        report.add("sign_pattern", "sgn Q agrees with F on both sides of the jump", signs == wanted, signs, wanted)
        return report

    t, c = p.t, p.c
    before = p.i_star_before_shift
    low, high = (1 - 4 * c) * t, (1 + 4 * c) * t
    report.add("i_star_window", "(1-4c)t <= i* <= (1+4c)t before translation",
               low <= before <= high, before, [low, high])

    reflected = p.i_star != before + p.offset
    K = isqrt((Q.n - t + 1) // t)
    L = int(c * t)
    worst_term = None
    for k in range(2, K + 1):
        for l in range(L + 1):
            point = t * k * k + 4 * l + p.offset
            if reflected:
                point = Q.n - point
            if point in masses:
                bound = Fraction(1, t * t * (k * k - 2) ** 2)
                worst_term = max(worst_term or Fraction(0), masses[point] / bound)
    report.add("square_terms", "C(n,r)|P(r)| <= 1/(t^2 (k^2-2)^2) for r = tk^2 + 4l, k >= 2",
               worst_term is None or worst_term <= 1, worst_term, Fraction(1))

    worst_step = None
    for s in p.S:
        gap = s - anchor
        if gap and gap % 4 == 0 and abs(gap) <= 4 * L:
            bound = Fraction(1, gap * gap - 1)
            worst_step = max(worst_step or Fraction(0), masses[s] / bound)
    report.add("step_terms", "C(n,v)|P(v)| <= 1/(16l^2 - 1) for v = i* + 4l",
               worst_step is None or worst_step <= 1, worst_step, Fraction(1))

    tail = sum((m for s, m in masses.items() if abs(s - anchor) > 1), Fraction(0))
    report.add("tail", "the mass of T outside i*-1, i*, i*+1 is at most 2/5", tail <= TAIL_BOUND, tail, TAIL_BOUND)
    report.add("translation", "the translated support stays inside [0, n]", not p.dropped, len(p.dropped), 0)
    return report


def square_gap_product(m: int, k: int) -> int:
    """Π_{j ∈ [m], j ≠ k} |k² − j²|."""
    if not 0 <= k <= m:
        raise PreconditionError(f"k must lie in 0..{m}, got {k}")
    product = 1
    for j in range(m + 1):
        if j != k:
            product *= abs(k * k - j * j)
    return product


def min_prod_facts_check(m: int, tmax: int, precision: int = 256, terms: int = 4096) -> VerificationReport:
    """
    Π_{j ∈ [m'], j ≠ k} |k² − j²| is smallest at k = 1 and equals ½(m' + k)!(m' − k)! for k ≥ 1,
    for every m' ≤ m; partial sums of Σ_{j ≥ 0, j ≠ k} 1/|j² − k²| stay below π²/3 for k ≤ tmax.
    """
    if m < 1 or tmax < 0:
        logger.error(f"min_prod_facts_check: m={m}, tmax={tmax}")
        raise PreconditionError(f"need m >= 1 and tmax >= 0, got m={m}, tmax={tmax}")
    report = VerificationReport(subject=f"difference-of-squares products up to m={m}", scope="min_prod_facts")

    minimum_violations = 0
    closed_form_violations = 0
    for top in range(1, m + 1):
        products = []
        for k in range(top + 1):
            product = square_gap_product(top, k)
            products.append(product)
            if k >= 1 and 2 * product != factorial(top + k) * factorial(top - k):
                closed_form_violations += 1
        if min(products) != products[1]:
            minimum_violations += 1
    report.add("minimized_at_one", "the product of |k^2 - j^2| is minimized at k = 1", minimum_violations == 0,
               minimum_violations, 0)
    report.add("closed_form", "the product equals (m+k)!(m-k)!/2 for k >= 1", closed_form_violations == 0,
               closed_form_violations, 0)

    ctx = ap_context(precision)
    limit = ctx.pi ** 2 / 3
    largest = ctx.mpf(0)
    for k in range(tmax + 1):
        total = ctx.fsum(ctx.mpf(1) / abs(j * j - k * k) for j in range(terms + 1) if j != k)
        largest = max(largest, total)
    report.add("reciprocal_sums", "sum over j != k of 1/|j^2 - k^2| stays below pi^2/3", largest <= limit,
               ap_to_hex(largest, ctx), ap_to_hex(limit, ctx))
    return report

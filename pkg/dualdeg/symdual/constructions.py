"""
Explicit dual polynomials for symmetric functions: the perfect-square
witness for OR, the t ± 4ℓ witness for a jump near the middle, and the
interlaced-squares witness for a jump at 2 ≤ t ≤ n/4.
"""
from fractions import Fraction
from logging import Logger
from math import isqrt

from dualdeg.boolfn import SymmetricProfile, gamma, reflect_profile, threshold_profile
from dualdeg.errors import PreconditionError
from dualdeg.numeric import factorial
from dualdeg.symdual.univariate import Provenance, UnivariateDual, level_values, pi_S
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

C_GENERAL = Fraction(1, 32)


def _oriented(Q: UnivariateDual, profile: SymmetricProfile) -> UnivariateDual:
    """Resolves the sign bit: keeps whichever of ±Q correlates nonnegatively with F."""
    return Q.negated() if Q.correlation(profile) < 0 else Q


def spalek_or_dual(n: int, profile: SymmetricProfile | None = None) -> UnivariateDual:
    """
    S = perfect squares in [n], T = S ∪ {2}, P = (1/n!) Π_{[n] \\ T} (x − j).

    P is R/(x − 2) for R = (1/n!) Π_{[n] \\ S} (x − j).
    """
    if n < 4:
        logger.error(f"perfect-square OR witness needs n >= 4, got {n}")
        raise PreconditionError(f"the perfect-square OR witness needs n >= 4, got {n}")
    S = tuple(k * k for k in range(isqrt(n) + 1))
    T = tuple(sorted(set(S) | {2}))
    values = level_values(n, T, Fraction(1, factorial(n)))
    Q = UnivariateDual(n=n, values=values,
                       provenance=Provenance(construction="spalek", t=1, S=S, T=T))
    Q = _oriented(Q, profile or threshold_profile(n, 1))
    logger.debug(f"perfect-square OR witness n={n}: |S|={len(S)}, sign={Q.provenance.sign}")
    return Q


def maj_dual(n: int, t: int, profile: SymmetricProfile | None = None) -> UnivariateDual:
    """
    S = {t ± 4ℓ : 0 ≤ ℓ ≤ h}, T = S ∪ {t − 1, t + 1},
    P = ±(4^(2h) (h!)² / n!) Π_{[n] \\ T} (x − j), normalized so C(n, t)|P(t)| = 1.

    h = ⌊min(t, n − t)/4⌋, which is ⌊t/4⌋ whenever t ≤ n/2.
    """
    if not 1 <= t <= n - 1:
        logger.error(f"maj_dual: t={t} outside 1..{n - 1}")
        raise PreconditionError(f"t must satisfy 1 <= t <= n - 1, got t={t}, n={n}")
    h = min(t, n - t) // 4
    S = tuple(sorted({t + 4 * l for l in range(h + 1)} | {t - 4 * l for l in range(h + 1)}))
    T = tuple(sorted(set(S) | {t - 1, t + 1}))
    coefficient = Fraction(4 ** (2 * h) * factorial(h) ** 2, factorial(n))
    values = level_values(n, T, coefficient)
    Q = UnivariateDual(n=n, values=values,
                       provenance=Provenance(construction="maj", t=t, S=S, T=T, i_star=t, h=h))
    Q = _oriented(Q, profile or threshold_profile(n, t))
    logger.debug(f"maj witness n={n}, t={t}: h={h}, |T|={len(T)}, sign={Q.provenance.sign}")
    return Q


def interlaced_squares(n: int, t: int) -> tuple[int, ...]:
    """
    {tk² + 4ℓ : 0 ≤ k ≤ K, 0 ≤ ℓ ≤ L} ∪ {t − 4ℓ : 0 ≤ ℓ ≤ L},
    K = ⌊√((n − t + 1)/t)⌋, L = ⌊t/32⌋.
    """
    K = isqrt((n - t + 1) // t)
    L = int(C_GENERAL * t)
    points = {t * k * k + 4 * l for k in range(K + 1) for l in range(L + 1)}
    points |= {t - 4 * l for l in range(L + 1)}
    return tuple(sorted(points))


def product_minimizer(S: tuple[int, ...], t: int) -> int:
    """argmin of π_S over S; ties go toward t, then to the smaller point."""
    return min(S, key=lambda i: (pi_S(S, i), abs(i - t), i))


def _case(masses: dict[int, Fraction], i_star: int) -> int:
    """Which of the three masses around i* is smallest; ties favour the lower case number."""
    below, above = masses[i_star - 1], masses[i_star + 1]
    if below >= above and 1 >= above:
        return 1
    if 1 >= below and above >= below:
        return 2
    return 3


def general_sym_dual(n: int, t: int, profile: SymmetricProfile | None = None) -> UnivariateDual:
    """
    Interlaced-squares witness for a jump at 2 ≤ t ≤ n/4.

    S is translated so that the π_S minimizer i* lands on t, t − 1 or t + 1
    according to which of the masses at i* − 1, i*, i* + 1 is smallest;
    T = S ∪ {i* − 1, i* + 1} and P = ±(π_T(i*)/n!) Π_{[n] \\ T} (x − j).
    """
    if not (2 <= t and 4 * t <= n):
        logger.error(f"general_sym_dual: t={t} outside 2..n/4 for n={n}")
        raise PreconditionError(f"the interlaced-squares witness needs 2 <= t <= n/4, got t={t}, n={n}")

    S0 = interlaced_squares(n, t)
    i_raw = product_minimizer(S0, t)
    T0 = tuple(sorted(set(S0) | {i_raw - 1, i_raw + 1}))
    anchor = pi_S(T0, i_raw)
    masses = {r: anchor / pi_S(T0, r) for r in T0}
    case = _case(masses, i_raw)
    target = {1: t, 2: t - 1, 3: t + 1}[case]
    offset = target - i_raw

    shifted = [s + offset for s in T0]
    dropped = tuple(s for s in shifted if not 0 <= s <= n)
    if dropped:
        logger.warning(f"general_sym_dual(n={n}, t={t}): translation by {offset} drops {dropped}")
    T = tuple(s for s in shifted if 0 <= s <= n)
    S = tuple(s + offset for s in S0 if 0 <= s + offset <= n)
    i_star = i_raw + offset

    coefficient = pi_S(T, i_star) / factorial(n)
    values = level_values(n, T, coefficient)
    Q = UnivariateDual(n=n, values=values, provenance=Provenance(
        construction="general", t=t, S=S, T=T, i_star=i_star, offset=offset, c=C_GENERAL,
        case=case, i_star_before_shift=i_raw, dropped=dropped))
    Q = _oriented(Q, profile or threshold_profile(n, t))
    logger.debug(f"general witness n={n}, t={t}: i*={i_raw}->{i_star}, case {case}, |T|={len(T)}")
    return Q


def central_jump(profile: SymmetricProfile) -> int:
    """The jump t minimizing |2t − n − 1|; ties go to the smaller t."""
    distance, jump_set = gamma(profile)
    return min(t for t in jump_set if abs(2 * t - profile.n - 1) == distance)


def dual_for_profile(profile: SymmetricProfile) -> UnivariateDual:
    """
    Dispatches on the jump closest to the middle: reflects it into t ≤ n/2,
    then t = 1 uses the OR witness, t > n/4 the maj witness, anything else
    the interlaced-squares witness.
    """
    n = profile.n
    if n < 2:
        raise PreconditionError(f"a symmetric dual needs n >= 2, got {n}")
    t = central_jump(profile)
    reflect = 2 * t > n + 1
    working = reflect_profile(profile) if reflect else profile
    if reflect:
        t = n + 1 - t

    if t == 1 and n >= 4:
        Q = spalek_or_dual(n, working)
    elif t == 1 or 4 * t > n:
        Q = maj_dual(n, t, working)
    else:
        Q = general_sym_dual(n, t, working)

    if reflect:
        Q = Q.reflected()
    logger.info(f"dual for profile on n={n}: {Q.provenance.construction} at t={t}{' (reflected)' if reflect else ''}")
    return Q

import random
from fractions import Fraction

import pytest

from dualdeg.errors import GuardExceededError, PreconditionError
from dualdeg.markov import (
    IDENTITIES,
    ChebyshevPoly,
    certificate_at_one,
    certificate_at_zero,
    chebyshev_deriv_at_one,
    chebyshev_deriv_product_form,
    derivative_bound_check,
    elementary_symmetric,
    higher_certificate,
    trig_identity_suite,
    vandermonde_skip_check,
)
from dualdeg.numeric import ap_context, ap_to_hex, tolerance


def test_chebyshev_coefficients():
    assert ChebyshevPoly(0).coefficients == (1,)
    assert ChebyshevPoly(1).coefficients == (0, 1)
    assert ChebyshevPoly(4).coefficients == (1, 0, -8, 0, 8)
    assert ChebyshevPoly(5).coefficients == (0, 5, 0, -20, 0, 16)


@pytest.mark.parametrize("n", range(0, 13))
def test_chebyshev_recurrence_matches_closed_form(n):
    T = ChebyshevPoly(n)
    assert T.matches_closed_form()
    assert T(1) == 1
    shifted = T.shifted_coefficients
    assert shifted[0] == 1
    if n:
        assert shifted[1] == n * n


def test_chebyshev_equioscillates_at_nodes():
    ctx = ap_context(128)
    for n in (3, 7, 10):
        values = ChebyshevPoly(n).node_values(ctx)
        for j, value in enumerate(values):
            assert abs(value - (-1) ** j) < tolerance(ctx, -100)


def test_derivatives_at_one():
    assert chebyshev_deriv_at_one(7, 0) == 1
    assert chebyshev_deriv_at_one(7, 1) == 49
    assert chebyshev_deriv_at_one(4, 2) == 80
    for n in range(1, 13):
        for k in range(n + 1):
            assert chebyshev_deriv_at_one(n, k) == chebyshev_deriv_product_form(n, k)
    with pytest.raises(PreconditionError):
        chebyshev_deriv_at_one(3, 4)


def test_certificate_at_zero_for_three():
    certificate = certificate_at_zero(3, 256)
    ctx = certificate.ctx
    expected = [ctx.mpf(1) / 6, ctx.mpf(4) / 3, ctx.mpf(4) / 3, ctx.mpf(1) / 6]
    for value, target in zip(certificate.y, expected):
        assert abs(value - target) < tolerance(ctx, -240)
    assert certificate.passed
    assert certificate.residual < tolerance(ctx, -200)
    assert certificate.expected == 3


@pytest.mark.parametrize("n", [5, 7, 11, 21, 33])
def test_certificate_at_zero_sums_to_n(n):
    certificate = certificate_at_zero(n, 256)
    assert certificate.passed, [check.as_dict() for check in certificate.report.failures()]
    assert abs(certificate.dual_value - n) < tolerance(certificate.ctx, -128)


@pytest.mark.parametrize("n", [1, 4, 10])
def test_certificate_at_zero_rejects_even_or_small(n):
    with pytest.raises(PreconditionError):
        certificate_at_zero(n, 256)


def test_certificate_at_one_for_two():
    certificate = certificate_at_one(2, 256)
    ctx = certificate.ctx
    for value, target in zip(certificate.y, [ctx.mpf(3) / 2, ctx.mpf(2), ctx.mpf(1) / 2]):
        assert abs(value - target) < tolerance(ctx, -240)
    assert certificate.passed
    assert certificate.expected == 4


@pytest.mark.parametrize("n", [3, 6, 13, 25, 40])
def test_certificate_at_one_sums_to_n_squared(n):
    certificate = certificate_at_one(n, 256)
    assert certificate.passed, [check.as_dict() for check in certificate.report.failures()]
    assert all(value > 0 for value in certificate.y)


def test_certificate_at_one_needs_two():
    with pytest.raises(PreconditionError):
        certificate_at_one(1, 256)


def test_higher_certificate_second_derivative():
    certificate = higher_certificate(4, 2, 256)
    assert certificate.expected == 80
    assert certificate.passed, [check.as_dict() for check in certificate.report.failures()]
    assert certificate.report.get("cramer_sign").passed


def test_first_order_higher_certificate_is_the_certificate_at_one():
    solved = higher_certificate(9, 1, 256)
    explicit = certificate_at_one(9, 256)
    for a, b in zip(solved.y, explicit.y):
        assert abs(a - b) < tolerance(solved.ctx, -200) * max(1, abs(b))


@pytest.mark.parametrize("n", [2, 5, 8, 12])
def test_higher_certificates_are_positive(n):
    for k in range(1, n + 1):
        certificate = higher_certificate(n, k, 256)
        assert certificate.passed, (k, [check.as_dict() for check in certificate.report.failures()])


def test_higher_certificate_range():
    with pytest.raises(PreconditionError):
        higher_certificate(4, 0, 256)
    with pytest.raises(PreconditionError):
        higher_certificate(4, 5, 256)


def test_elementary_symmetric():
    assert elementary_symmetric([Fraction(1), Fraction(2), Fraction(3)], 0) == 1
    assert elementary_symmetric([Fraction(1), Fraction(2), Fraction(3)], 2) == 11
    assert elementary_symmetric([Fraction(1), Fraction(2), Fraction(3)], 3) == 6


def test_vandermonde_two_points():
    report = vandermonde_skip_check([1, 2], 0)
    assert report.passed
    assert report.get("skip_row_identity").measured == 2
    assert vandermonde_skip_check([1, 2], 2).passed


@pytest.mark.parametrize("m", range(1, 7))
def test_vandermonde_random_rationals(m):
    rng = random.Random(m)
    points: set[Fraction] = set()
    while len(points) < m:
        points.add(Fraction(rng.randint(-20, 20), rng.randint(1, 7)))
    for k in range(m + 1):
        assert vandermonde_skip_check(sorted(points), k).passed


def test_vandermonde_preconditions():
    with pytest.raises(PreconditionError):
        vandermonde_skip_check([1, 1, 2], 1)
    with pytest.raises(PreconditionError):
        vandermonde_skip_check([1, 2], 3)
    with pytest.raises(GuardExceededError):
        vandermonde_skip_check(list(range(11)), 2)


@pytest.mark.parametrize("n,x0,grid", [
    (5, Fraction(0), 12),
    (5, Fraction(1, 2), 24),
    (3, Fraction(-1, 3), 16),
    (4, Fraction(99, 100), 10),
])
def test_derivative_bounds(n, x0, grid):
    report = derivative_bound_check(n, x0, grid, 128)
    assert report.passed, [check.as_dict() for check in report.failures()]


def test_derivative_extremal_values():
    assert derivative_bound_check(5, 0, 12, 128).get("scaled_bound").expected == 5
    assert derivative_bound_check(5, Fraction(1, 2), 12, 128).get("scaled_bound").measured == 12


def test_sparse_grid_is_flagged():
    report = derivative_bound_check(5, 0, 8, 128)
    assert not report.get("grid_density").passed
    assert report.get("lp_dominates_extremal").passed


def test_derivative_point_must_be_interior():
    with pytest.raises(PreconditionError):
        derivative_bound_check(3, 1, 10, 128)


def test_trig_suite():
    report = trig_identity_suite(14, 128)
    assert report.passed, [check.as_dict() for check in report.failures()]
    assert [check.name for check in report.checks] == [identity.name for identity in IDENTITIES]


def test_trig_suite_range():
    with pytest.raises(PreconditionError):
        trig_identity_suite(2, 128)


@pytest.mark.parametrize("k", [1, 2, 15, 29, 30])
def test_higher_certificate_sum_is_absolutely_accurate(k):
    certificate = higher_certificate(30, k, 256)
    check = certificate.report.get("dual_value_absolute")
    assert check.passed, check.as_dict()
    assert check.tolerance == ap_to_hex(tolerance(certificate.ctx, -100), certificate.ctx)
    assert certificate.passed, [check.as_dict() for check in certificate.report.failures()]


def test_explicit_certificates_carry_the_absolute_check():
    assert certificate_at_zero(21, 256).report.get("dual_value_absolute").passed
    assert certificate_at_one(20, 256).report.get("dual_value_absolute").passed


@pytest.mark.parametrize("build", [
    lambda precision: certificate_at_zero(21, precision),
    lambda precision: certificate_at_one(20, precision),
    lambda precision: higher_certificate(12, 3, precision),
], ids=["at_zero_21", "at_one_20", "higher_12_3"])
@pytest.mark.parametrize("precision", [256, 512])
def test_residual_shrinks_when_precision_doubles(build, precision):
    coarse = build(precision).residual
    fine = build(2 * precision).residual
    assert float(fine) * 2.0 ** (precision // 2) <= float(coarse)

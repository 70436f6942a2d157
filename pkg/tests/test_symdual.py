from math import factorial
from fractions import Fraction

import pytest

from dualdeg.boolfn import SymmetricProfile, threshold_profile
from dualdeg.errors import PreconditionError
from dualdeg.fourier import pure_high_degree
from dualdeg.symdual import (
    central_jump,
    dual_for_profile,
    general_sym_dual,
    lift,
    maj_dual,
    min_prod_facts_check,
    pi_S,
    read_sym_witness,
    spalek_or_dual,
    square_gap_product,
    structural_phd,
    verify_construction,
    verify_sym_witness,
    write_sym_witness,
)


def test_pi_s_examples():
    assert pi_S({0, 1, 4}, 1) == 3
    assert pi_S({7}, 7) == 1
    for t in range(1, 6):
        assert pi_S(range(-t, t + 1), 0) == factorial(t) ** 2


def test_pi_s_outside_set():
    with pytest.raises(PreconditionError):
        pi_S({0, 1}, 5)


def test_spalek_smallest_case():
    Q = spalek_or_dual(4)
    assert Q.provenance.T == (0, 1, 2, 4)
    assert [Q.mass(i) for i in (0, 1, 2, 4)] == [Fraction(1, 8), Fraction(1, 3), Fraction(1, 4), Fraction(1, 24)]
    assert Q.mass(3) == 0
    assert Q[0] == Fraction(1, 8)
    assert Q.ratio(threshold_profile(4, 1)) == Fraction(1, 3)


def test_spalek_sixteen():
    Q = spalek_or_dual(16)
    or16 = threshold_profile(16, 1)
    assert Q.correlation(or16) == 2 * Q[0]
    assert Q.ratio(or16) >= Fraction(1, 14)
    assert structural_phd(Q) == len(Q.provenance.S) - 1
    report = verify_construction(Q)
    assert report.passed, [check.as_dict() for check in report.failures()]


def test_maj_twenty_ten():
    Q = maj_dual(20, 10)
    tau = threshold_profile(20, 10)
    assert Q.ratio(tau) > Fraction(3, 13)
    assert Q[9] > 0 and Q[10] < 0
    assert verify_construction(Q).passed
    assert verify_sym_witness(Q, tau, Q.claimed_phd, Fraction(3, 13)).passed


def test_maj_without_arms():
    Q = maj_dual(6, 2)
    assert Q.provenance.h == 0
    assert Q.provenance.S == (2,)
    assert Q.provenance.T == (1, 2, 3)
    assert verify_construction(Q).passed


@pytest.mark.parametrize("n", [4, 7, 10, 13])
def test_maj_beats_three_thirteenths(n):
    for t in range(1, n // 2 + 1):
        assert maj_dual(n, t).ratio(threshold_profile(n, t)) > Fraction(3, 13)


def test_general_sixty_four_four():
    Q = general_sym_dual(64, 4)
    p = Q.provenance
    assert p.i_star_before_shift == 4
    assert p.i_star == 4
    assert p.case == 1
    assert p.dropped == ()
    assert p.T == (0, 3, 4, 5, 16, 36)
    assert Q.ratio(threshold_profile(64, 4)) >= Fraction(1, 14)
    report = verify_construction(Q)
    assert report.passed, [check.as_dict() for check in report.failures()]
    assert report.get("tail").measured <= Fraction(2, 5)


@pytest.mark.parametrize("n,t", [(8, 2), (12, 3), (20, 5), (40, 6)])
def test_general_construction_facts(n, t):
    Q = general_sym_dual(n, t)
    assert Q.ratio(threshold_profile(n, t)) >= Fraction(1, 14)
    assert verify_construction(Q).passed


@pytest.mark.parametrize("build", [
    lambda: spalek_or_dual(6),
    lambda: spalek_or_dual(9),
    lambda: maj_dual(7, 3),
    lambda: maj_dual(10, 5),
    lambda: maj_dual(11, 6),
    lambda: general_sym_dual(8, 2),
    lambda: general_sym_dual(12, 3),
])
def test_structural_and_lifted_phd_agree(build):
    Q = build()
    assert structural_phd(Q) == pure_high_degree(lift(Q)) == Q.claimed_phd
    report = verify_sym_witness(Q, threshold_profile(Q.n, Q.provenance.t), Q.claimed_phd, Fraction(0))
    assert report.passed, [check.as_dict() for check in report.failures()]


def test_verify_rejects_arity_mismatch():
    with pytest.raises(PreconditionError):
        verify_sym_witness(maj_dual(6, 3), threshold_profile(7, 3), 0, Fraction(0))


def test_overclaimed_degree_fails():
    Q = maj_dual(8, 4)
    report = verify_sym_witness(Q, threshold_profile(8, 4), Q.claimed_phd + 1, Fraction(0))
    assert not report.get("structural_phd").passed
    assert report.get("ratio").passed


def test_construction_preconditions():
    with pytest.raises(PreconditionError):
        spalek_or_dual(3)
    with pytest.raises(PreconditionError):
        maj_dual(10, 10)
    with pytest.raises(PreconditionError):
        general_sym_dual(10, 3)
    with pytest.raises(PreconditionError):
        general_sym_dual(40, 1)


def test_central_jump_prefers_the_middle():
    profile = SymmetricProfile(n=6, values=(1, -1, -1, -1, 1, 1, 1))
    assert central_jump(profile) == 4


@pytest.mark.parametrize("n,t,construction", [
    (8, 1, "spalek"),
    (3, 1, "maj"),
    (10, 5, "maj"),
    (12, 3, "general"),
    (8, 8, "spalek"),
    (10, 8, "maj"),
    (12, 10, "general"),
])
def test_dispatch(n, t, construction):
    profile = threshold_profile(n, t)
    Q = dual_for_profile(profile)
    assert Q.provenance.construction == construction
    assert Q.ratio(profile) > 0
    assert verify_construction(Q).passed
    assert verify_sym_witness(Q, profile, Q.claimed_phd, Fraction(0)).passed


def test_reflected_or_matches_direct_or():
    Q = dual_for_profile(threshold_profile(8, 8))
    assert Q.ratio(threshold_profile(8, 8)) == spalek_or_dual(8).ratio(threshold_profile(8, 1))


def test_constant_profile_has_no_dual():
    with pytest.raises(PreconditionError):
        dual_for_profile(threshold_profile(5, 6))


def test_witness_file_round_trip(tmp_path):
    Q = general_sym_dual(40, 6)
    path = tmp_path / "q.txt"
    write_sym_witness(Q, path)
    assert read_sym_witness(path) == Q


def test_malformed_witness_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("n=4\nconstruction=maj\nvalues\n0 1/2\n", encoding="utf-8")
    with pytest.raises(PreconditionError):
        read_sym_witness(path)


def test_square_gap_products():
    assert square_gap_product(5, 3) == 40320
    assert square_gap_product(1, 1) == 1


def test_min_prod_facts():
    report = min_prod_facts_check(12, 3, terms=512)
    assert report.passed, [check.as_dict() for check in report.failures()]


def test_maj_sign_pattern_for_small_arities():
    for n in range(2, 31):
        for t in range(1, n // 2 + 1):
            check = verify_construction(maj_dual(n, t)).get("sign_pattern")
            assert check.passed, (n, t, check.as_dict())
            assert check.measured == [1, -1]


@pytest.mark.parametrize("n, t, anchor", [(10, 8, 7), (10, 6, 5), (13, 9, 8)])
def test_reflected_maj_sign_pattern(n, t, anchor):
    profile = threshold_profile(n, t)
    Q = dual_for_profile(profile)
    assert Q.provenance.construction == "maj"
    assert Q.provenance.i_star == anchor
    check = verify_construction(Q, profile).get("sign_pattern")
    assert check.passed, check.as_dict()
    assert check.measured == [1, -1]


def test_maj_sign_pattern_follows_the_given_profile():
    negated = SymmetricProfile(n=12, values=tuple(-v for v in threshold_profile(12, 5).values))
    Q = maj_dual(12, 5, negated)
    assert verify_construction(Q, negated).get("sign_pattern").passed
    assert not verify_construction(Q).get("sign_pattern").passed


def test_construction_check_rejects_arity_mismatch():
    with pytest.raises(PreconditionError):
        verify_construction(maj_dual(8, 3), threshold_profile(9, 3))

import random
from fractions import Fraction

import pytest

from dualdeg.boolfn import all_boolfns, make_named, negate_inputs, random_boolfn, to_profile
from dualdeg.dualcore import (
    DualWitness,
    approx_degree,
    best_eps,
    best_eps_symmetric,
    degree_profile,
    optimal_dual_witness,
    read_witness,
    symmetric_dual_witness,
    verify_witness,
    write_witness,
)
from dualdeg.errors import PreconditionError
from dualdeg.fourier import RealCubeFn, correlation, l1_norm, pure_high_degree


def test_and2_values():
    and2 = make_named("AND", n=2)
    assert best_eps(and2, 1) == Fraction(1, 2)
    assert best_eps(and2, 2) == 0
    assert approx_degree(and2, Fraction(1, 3)) == 2


def test_best_constant_for_or1():
    assert best_eps(make_named("OR", n=1), 0) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_parity_needs_full_degree(n):
    parity = make_named("PARITY", n=n)
    assert approx_degree(parity, Fraction(9, 10)) == n
    assert best_eps(parity, n - 1) == 1


def test_eps_range_is_checked():
    with pytest.raises(PreconditionError):
        approx_degree(make_named("OR", n=2), Fraction(1))
    with pytest.raises(PreconditionError):
        best_eps(make_named("OR", n=2), 3)


def test_or2_witness():
    witness = optimal_dual_witness(make_named("OR", n=2), 0)
    assert witness.claimed_correlation == 1
    assert l1_norm(witness.phi) == 1
    assert pure_high_degree(witness.phi) >= 0


def test_and2_witness_matches_primal():
    and2 = make_named("AND", n=2)
    witness = optimal_dual_witness(and2, 1)
    assert witness.claimed_correlation == Fraction(1, 2)
    assert verify_witness(witness, and2, 1, Fraction(1, 2) - Fraction(1, 1000)).passed


def test_witness_needs_degree_below_arity():
    with pytest.raises(PreconditionError):
        optimal_dual_witness(make_named("AND", n=2), 2)


@pytest.mark.parametrize("n", [1, 2])
def test_strong_duality_on_every_small_function(n):
    for f in all_boolfns(n):
        for d in range(n):
            eps = best_eps(f, d)
            witness = optimal_dual_witness(f, d)
            assert witness.claimed_correlation == eps
            assert correlation(witness.phi, f) == eps
            assert verify_witness(witness, f, d, eps - Fraction(1, 1000)).passed


def test_strong_duality_on_random_three_bit_functions():
    rng = random.Random(3)
    for _ in range(12):
        f = random_boolfn(3, rng)
        for d in range(3):
            witness = optimal_dual_witness(f, d)
            assert witness.claimed_correlation == best_eps(f, d)
            assert l1_norm(witness.phi) == 1
            assert pure_high_degree(witness.phi) >= d


def test_degree_exceeds_d_exactly_when_witness_beats_eps():
    eps = Fraction(1, 3)
    for f in all_boolfns(2):
        for d in range(2):
            witness = optimal_dual_witness(f, d)
            assert (approx_degree(f, eps) > d) == verify_witness(witness, f, d, eps).passed


def test_uniform_sign_measure_fails_phd():
    and2 = make_named("AND", n=2)
    witness = DualWitness(phi=RealCubeFn.of(2, and2.table).scaled(Fraction(1, 4)), claimed_phd=1,
                          claimed_correlation=Fraction(1), target=and2.label)
    report = verify_witness(witness, and2, 1, Fraction(1, 3))
    assert report.get("correlation").passed
    assert report.get("l1").passed
    assert not report.get("phd").passed
    assert report.get("phd").measured == -1


def test_halved_witness_fails_l1():
    and2 = make_named("AND", n=2)
    witness = optimal_dual_witness(and2, 1)
    halved = DualWitness(phi=witness.phi.scaled(Fraction(1, 2)), claimed_phd=1,
                         claimed_correlation=Fraction(1, 4), target=and2.label)
    report = verify_witness(halved, and2, 1, Fraction(1, 5))
    assert not report.passed
    assert [check.name for check in report.failures()] == ["l1"]


def test_verify_rejects_arity_mismatch():
    witness = optimal_dual_witness(make_named("AND", n=2), 1)
    with pytest.raises(PreconditionError):
        verify_witness(witness, make_named("AND", n=3), 1, Fraction(1, 3))


def test_best_eps_is_invariant_under_input_negation():
    rng = random.Random(11)
    for _ in range(8):
        f = random_boolfn(3, rng)
        for d in range(4):
            assert best_eps(f, d) == best_eps(negate_inputs(f), d)


def test_approx_degree_is_monotone_in_eps():
    rng = random.Random(5)
    grid = [Fraction(k, 12) for k in range(12)]
    for _ in range(6):
        f = random_boolfn(3, rng)
        degrees = [approx_degree(f, eps) for eps in grid]
        assert all(a >= b for a, b in zip(degrees, degrees[1:]))


def test_degree_profile_matches_approx_degree():
    f = make_named("OR", n=4)
    grid = [Fraction(0), Fraction(1, 10), Fraction(1, 3), Fraction(1, 2)]
    profile = degree_profile(f, grid)
    assert profile == {eps: approx_degree(f, eps) for eps in grid}


@pytest.mark.parametrize("family", ["OR", "MAJ", "AND"])
def test_symmetric_reduction_agrees_with_full_lp(family):
    f = make_named(family, n=4)
    for d in range(5):
        assert best_eps_symmetric(to_profile(f), d) == best_eps(f, d)


def test_symmetric_witness_lifts_to_a_valid_witness():
    f = make_named("MAJ", n=4)
    for d in range(4):
        symmetric = symmetric_dual_witness(to_profile(f), d)
        phi = symmetric.lift()
        assert symmetric.correlation == best_eps(f, d)
        assert correlation(phi, f) == symmetric.correlation
        assert l1_norm(phi) == 1
        assert pure_high_degree(phi) >= d


def test_witness_file_round_trip(tmp_path):
    witness = optimal_dual_witness(make_named("OR", n=3), 1)
    write_witness(witness, tmp_path / "or3.witness")
    assert read_witness(tmp_path / "or3.witness") == witness


def test_malformed_witness_file(tmp_path):
    (tmp_path / "bad.witness").write_text("n=2\nd=1\n", encoding="utf-8")
    with pytest.raises(PreconditionError):
        read_witness(tmp_path / "bad.witness")

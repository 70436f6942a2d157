import random

import pytest

from dualdeg.boolfn import (
    BoolFn,
    all_boolfns,
    block_sensitivity,
    block_sensitivity_at,
    compose_functions,
    evaluate,
    flip_block,
    from_profile,
    gamma,
    is_symmetric,
    jumps,
    make_named,
    negate_inputs,
    point_of,
    points,
    random_boolfn,
    read_profile,
    read_table,
    reflect_profile,
    to_profile,
    write_profile,
    write_table,
)
from dualdeg.errors import GuardExceededError, PreconditionError


def test_named_tables():
    assert make_named("OR", n=2).table == (1, -1, -1, -1)
    assert make_named("AND", n=2).table == (1, 1, 1, -1)
    assert make_named("PARITY", n=2).table == (1, -1, -1, 1)


def test_andor_all_true_input():
    f = make_named("ANDOR", M=2, N=2)
    assert evaluate(f, (-1, -1, -1, -1)) == -1
    assert evaluate(f, (1, 1, -1, -1)) == 1
    assert evaluate(f, (-1, 1, 1, -1)) == -1


def test_threshold_special_cases():
    n = 5
    assert make_named("THRESHOLD", n=n, t=1).table == make_named("OR", n=n).table
    assert make_named("THRESHOLD", n=n, t=n).table == make_named("AND", n=n).table
    assert make_named("THRESHOLD", n=n, t=3).table == make_named("MAJ", n=n).table


@pytest.mark.parametrize("t", range(1, 7))
def test_threshold_has_single_jump(t):
    assert jumps(to_profile(make_named("THRESHOLD", n=6, t=t))) == [t]


def test_threshold_out_of_range():
    with pytest.raises(PreconditionError):
        make_named("THRESHOLD", n=4, t=5)


def test_table_guard():
    with pytest.raises(GuardExceededError):
        make_named("ANDOR", M=5, N=5)


def test_flip_block():
    assert flip_block((1, 1, 1), ()) == (1, 1, 1)
    assert flip_block((1, 1), {0, 1}) == (-1, -1)
    rng = random.Random(3)
    for _ in range(50):
        x = point_of(rng.randrange(1 << 6), 6)
        block = {i for i in range(6) if rng.random() < 0.5}
        assert flip_block(flip_block(x, block), block) == x
    with pytest.raises(PreconditionError):
        flip_block((1, 1), {2})


@pytest.mark.parametrize("m", range(1, 7))
def test_block_sensitivity_of_and(m):
    f = make_named("AND", n=m)
    assert block_sensitivity_at(f, (-1,) * m) == m
    for x in points(m):
        if x != (-1,) * m:
            assert block_sensitivity_at(f, x) == 1
    assert block_sensitivity(f) == m


@pytest.mark.parametrize("n", [1, 3, 5])
def test_block_sensitivity_of_parity(n):
    f = make_named("PARITY", n=n)
    for x in points(n):
        assert block_sensitivity_at(f, x) == n


def test_block_sensitivity_never_exceeds_arity():
    rng = random.Random(11)
    for _ in range(20):
        f = random_boolfn(5, rng)
        assert 0 <= block_sensitivity(f) <= 5


def test_block_sensitivity_guard():
    f = BoolFn(n=13, table=(1,) * (1 << 13))
    with pytest.raises(GuardExceededError):
        block_sensitivity_at(f, (1,) * 13)


def test_gamma():
    assert gamma(to_profile(make_named("MAJ", n=9)))[0] == 0
    assert gamma(to_profile(make_named("OR", n=7))) == (6, [1])
    assert gamma(to_profile(make_named("AND", n=7))) == (6, [7])
    with pytest.raises(PreconditionError):
        gamma(to_profile(BoolFn(n=2, table=(1, 1, 1, 1))))


def test_profile_round_trip_for_symmetric_functions():
    for n in range(1, 11):
        for t in range(1, n + 1):
            f = make_named("THRESHOLD", n=n, t=t)
            assert from_profile(to_profile(f)).table == f.table
    for f in all_boolfns(2):
        if is_symmetric(f):
            assert from_profile(to_profile(f)).table == f.table


def test_asymmetric_profile_refused():
    with pytest.raises(PreconditionError):
        to_profile(BoolFn(n=2, table=(1, -1, 1, 1)))


def test_negation_reflects_profile():
    f = make_named("THRESHOLD", n=6, t=2)
    assert to_profile(negate_inputs(f)) == reflect_profile(to_profile(f))


def test_compose_and_or_matches_named():
    composed = compose_functions(make_named("AND", n=2), make_named("OR", n=3))
    assert composed.table == make_named("ANDOR", M=2, N=3).table


def test_file_round_trips(tmp_path):
    f = random_boolfn(4, random.Random(5))
    write_table(f, tmp_path / "f.txt")
    assert read_table(tmp_path / "f.txt").table == f.table

    profile = to_profile(make_named("MAJ", n=5))
    write_profile(profile, tmp_path / "p.txt")
    assert read_profile(tmp_path / "p.txt") == profile

from fractions import Fraction

from dualdeg.lp import RationalLP, Status, dump_lp, solve


def test_single_constraint_max():
    lp = RationalLP(objective=(1,), sense="max")
    lp.add((1,), "<=", 3)
    solution = solve(lp)
    assert solution.status is Status.OPTIMAL
    assert solution.objective == 3
    assert solution.primal == (3,)
    assert solution.dual == (1,)


def test_best_constant_for_plus_minus_one():
    # variables (c, eps); minimize eps with |c - 1| <= eps and |c + 1| <= eps
    lp = RationalLP(objective=(0, 1), sense="min", nonneg=(False, True))
    lp.add((1, -1), "<=", 1)
    lp.add((1, 1), ">=", 1)
    lp.add((1, -1), "<=", -1)
    lp.add((1, 1), ">=", -1)
    solution = solve(lp)
    assert solution.objective == 1
    assert sum(con.rhs * y for con, y in zip(lp.constraints, solution.dual)) == 1


def test_and2_degree_one_primal():
    # p(x) = a + b(x1 + x2) over the four points of the 2-cube
    points = [(1, 1, 1), (-1, 1, 1), (1, -1, 1), (-1, -1, -1)]
    lp = RationalLP(objective=(0, 0, 0, 1), sense="min", nonneg=(False, False, False, True))
    for x1, x2, f in points:
        lp.add((1, x1, x2, 1), ">=", f)
        lp.add((1, x1, x2, -1), "<=", f)
    assert solve(lp).objective == Fraction(1, 2)


def test_infeasible_and_unbounded():
    lp = RationalLP(objective=(1,), nonneg=(True,))
    lp.add((1,), "<=", -1)
    assert solve(lp).status is Status.INFEASIBLE

    lp = RationalLP(objective=(1, 1))
    lp.add((1, -1), "<=", 2)
    assert solve(lp).status is Status.UNBOUNDED


def test_equality_rows_and_redundancy():
    lp = RationalLP(objective=(1, 2, 3), sense="max", nonneg=(True, True, True))
    lp.add((1, 1, 1), "=", 1)
    lp.add((2, 2, 2), "=", 2)
    lp.add((0, 1, 0), "<=", Fraction(1, 3))
    solution = solve(lp)
    assert solution.objective == 3
    assert solution.primal == (0, 0, 1)


def test_row_permutation_keeps_objective():
    rows = [((1, 2), "<=", 4), ((3, 1), "<=", 6), ((1, 0), ">=", Fraction(1, 2))]
    forward = RationalLP(objective=(3, 2), nonneg=(True, True))
    backward = RationalLP(objective=(3, 2), nonneg=(True, True))
    for row in rows:
        forward.add(*row)
    for row in reversed(rows):
        backward.add(*row)
    assert solve(forward).objective == solve(backward).objective == Fraction(36, 5)


def test_dump_lp_format():
    lp = RationalLP(objective=(1, Fraction(1, 2)), sense="min")
    lp.add((1, -1), ">=", Fraction(-3, 4))
    text = dump_lp(lp)
    assert text.splitlines() == ["min 1/1 1/2", "nonneg 0 0", "1/1 -1/1 >= -3/4"]

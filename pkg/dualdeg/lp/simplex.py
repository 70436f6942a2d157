"""
Two-phase primal simplex over Fractions with Bland's rule.
"""
from fractions import Fraction
from logging import Logger

from dualdeg.errors import SolverError
from dualdeg.lp.problem import LPSolution, RationalLP, Status
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class SimplexTableau:
    """
    Dense tableau B⁻¹A | B⁻¹b for a problem in equality form with x ≥ 0.

    The starting basis is the identity formed by slack and artificial
    columns, so those columns always hold B⁻¹; duals are read from them.
    """

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int], width: int) -> None:
        self.m: int = len(rows)
        self.n: int = width
        self.A: list[list[Fraction]] = rows
        self.b: list[Fraction] = rhs
        self.basis: list[int] = basis
        self.identity_columns: list[int] = list(basis)
        self.pivots: int = 0

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        reduced = list(cost)
        for i, var in enumerate(self.basis):
            weight = cost[var]
            if weight:
                row = self.A[i]
                for j in range(self.n):
                    if row[j]:
                        reduced[j] -= weight * row[j]
        return reduced

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.A[i]
        piv = pivot_row[j]
        if piv != ONE:
            self.A[i] = pivot_row = [a / piv for a in pivot_row]
            self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            factor = self.A[k][j]
            if factor:
                row = self.A[k]
                self.A[k] = [a - factor * p if p else a for a, p in zip(row, pivot_row)]
                self.b[k] -= factor * self.b[i]
        self.basis[i] = j
        self.pivots += 1

    def bland_primal_step(self, cost: list[Fraction], allowed: list[bool]) -> str:
        reduced = self.reduced_costs(cost)
        entering = next((j for j in range(self.n) if allowed[j] and reduced[j] > 0), None)
        if entering is None:
            return "optimal"
        candidates = [(self.b[i] / self.A[i][entering], self.basis[i], i)
                      for i in range(self.m) if self.A[i][entering] > 0]
        if not candidates:
            return "unbounded"
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return "go_on"

    def bland_primal(self, cost: list[Fraction], allowed: list[bool]) -> str:
        while True:
            result = self.bland_primal_step(cost, allowed)
            if result != "go_on":
                return result

    def value(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[var] * self.b[i] for i, var in enumerate(self.basis)), ZERO)

    def duals(self, cost: list[Fraction]) -> list[Fraction]:
        """y = c_B B⁻¹, one entry per row."""
        y = [ZERO] * self.m
        for i, var in enumerate(self.basis):
            weight = cost[var]
            if weight:
                row = self.A[i]
                for k, column in enumerate(self.identity_columns):
                    y[k] += weight * row[column]
        return y


class _StandardForm:
    """RationalLP rewritten as max c·z, Az = b, z ≥ 0, b ≥ 0."""

    def __init__(self, lp: RationalLP) -> None:
        # structural columns: (original index, +1/-1)
        self.columns: list[tuple[int, int]] = []
        for j in range(lp.width):
            self.columns.append((j, 1))
            if not lp.nonneg[j]:
                self.columns.append((j, -1))
        structural = len(self.columns)

        orientation = 1 if lp.sense == "max" else -1
        self.row_signs: list[int] = []
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        senses: list[str] = []
        for con in lp.constraints:
            sign = -1 if con.rhs < 0 else 1
            self.row_signs.append(sign)
            rows.append([sign * con.row[j] * s for j, s in self.columns])
            rhs.append(sign * con.rhs)
            sense = con.sense
            if sign < 0 and sense != "=":
                sense = ">=" if sense == "<=" else "<="
            senses.append(sense)

        m = len(rows)
        extra = sum(1 for s in senses if s != "=")
        artificial = sum(1 for s in senses if s != "<=")
        width = structural + extra + artificial
        self.artificial: list[bool] = [False] * (structural + extra) + [True] * artificial

        basis: list[int] = []
        next_slack, next_artificial = structural, structural + extra
        for i, sense in enumerate(senses):
            rows[i].extend([ZERO] * (width - structural))
            if sense == "<=":
                rows[i][next_slack] = ONE
                basis.append(next_slack)
                next_slack += 1
            else:
                if sense == ">=":
                    rows[i][next_slack] = -ONE
                    next_slack += 1
                rows[i][next_artificial] = ONE
                basis.append(next_artificial)
                next_artificial += 1

        self.tableau = SimplexTableau(rows, rhs, basis, width)
        self.cost: list[Fraction] = [ZERO] * width
        for k, (j, s) in enumerate(self.columns):
            self.cost[k] = orientation * s * lp.objective[j]
        self.phase_one_cost: list[Fraction] = [-ONE if art else ZERO for art in self.artificial]
        self.orientation = orientation
        self.m = m


def solve(lp: RationalLP) -> LPSolution:
    """
    Exact optimum and dual solution of `lp`.

    Infeasible and unbounded problems are statuses, not exceptions. An
    optimal answer is re-checked for strong duality before it is returned.
    """
    form = _StandardForm(lp)
    tableau = form.tableau
    everything = [True] * tableau.n

    if any(form.artificial):
        tableau.bland_primal(form.phase_one_cost, everything)
        if tableau.value(form.phase_one_cost) < 0:
            logger.debug(f"LP infeasible after {tableau.pivots} phase-one pivots")
            return LPSolution(status=Status.INFEASIBLE, pivots=tableau.pivots)
        _drive_out_artificials(tableau, form.artificial)

    structural_only = [not art for art in form.artificial]
    if tableau.bland_primal(form.cost, structural_only) == "unbounded":
        logger.debug(f"LP unbounded after {tableau.pivots} pivots")
        return LPSolution(status=Status.UNBOUNDED, pivots=tableau.pivots)

    values = [ZERO] * tableau.n
    for i, var in enumerate(tableau.basis):
        values[var] = tableau.b[i]
    primal = [ZERO] * lp.width
    for k, (j, s) in enumerate(form.columns):
        primal[j] += s * values[k]

    internal = tableau.duals(form.cost)
    dual = tuple(form.orientation * sign * y for sign, y in zip(form.row_signs, internal))
    objective = sum((c * v for c, v in zip(lp.objective, primal)), ZERO)

    solution = LPSolution(status=Status.OPTIMAL, primal=tuple(primal), dual=dual,
                          objective=objective, pivots=tableau.pivots)
    solution.check(lp)
    logger.debug(f"LP optimal value {objective} after {tableau.pivots} pivots")
    return solution


def _drive_out_artificials(tableau: SimplexTableau, artificial: list[bool]) -> None:
    """Pivots zero-level artificials out of the basis where a structural column allows it."""
    for i in range(tableau.m):
        if not artificial[tableau.basis[i]]:
            continue
        if tableau.b[i] != 0:
            raise SolverError("artificial variable basic at a nonzero level after phase one")
        column = next((j for j in range(tableau.n) if not artificial[j] and tableau.A[i][j] != 0), None)
        if column is not None:
            tableau.pivot(i, column)
        # otherwise the row is redundant; its artificial stays basic at zero

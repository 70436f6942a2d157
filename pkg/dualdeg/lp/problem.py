from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from logging import Logger
from pathlib import Path
from typing import Sequence

from dualdeg.errors import PreconditionError, SolverError
from dualdeg.numeric import format_rational
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

SENSES = ("<=", "=", ">=")


class Status(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    sense: str
    rhs: Fraction


@dataclass
class RationalLP:
    """
    optimize objective·x subject to row·x (<=|=|>=) rhs.

    Variables are free unless flagged in `nonneg`.
    """

    objective: tuple[Fraction, ...]
    sense: str = "max"
    constraints: list[Constraint] = field(default_factory=list)
    nonneg: tuple[bool, ...] | None = None

    def __post_init__(self) -> None:
        self.objective = tuple(Fraction(c) for c in self.objective)
        if self.sense not in ("max", "min"):
            raise PreconditionError(f"objective sense must be 'max' or 'min', got {self.sense!r}")
        if self.nonneg is None:
            self.nonneg = (False,) * self.width
        if len(self.nonneg) != self.width:
            raise PreconditionError("bound flags do not match the objective width")

    @property
    def width(self) -> int:
        return len(self.objective)

    def add(self, row: Sequence, sense: str, rhs) -> None:
        if sense not in SENSES:
            raise PreconditionError(f"constraint sense must be one of {SENSES}, got {sense!r}")
        if len(row) != self.width:
            raise PreconditionError(f"constraint of width {len(row)} in an LP of width {self.width}")
        self.constraints.append(Constraint(tuple(Fraction(a) for a in row), sense, Fraction(rhs)))


@dataclass(frozen=True)
class LPSolution:
    status: Status
    primal: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL

    def check(self, lp: RationalLP) -> None:
        """
        Re-verifies an optimal pair against `lp`: primal and dual feasibility,
        equal objectives, and complementary slackness, all exactly.
        """
        if not self.optimal:
            return
        x, y = self.primal, self.dual
        problems: list[str] = []
        maximize = lp.sense == "max"

        if sum(c * v for c, v in zip(lp.objective, x)) != self.objective:
            problems.append("reported objective differs from objective·x")
        for j, v in enumerate(x):
            if lp.nonneg[j] and v < 0:
                problems.append(f"x[{j}] = {v} violates its sign bound")

        for i, con in enumerate(lp.constraints):
            lhs = sum(a * v for a, v in zip(con.row, x))
            slack = con.rhs - lhs
            if (con.sense == "<=" and slack < 0) or (con.sense == ">=" and slack > 0) or (
                    con.sense == "=" and slack != 0):
                problems.append(f"row {i} infeasible ({lhs} {con.sense} {con.rhs})")
            # dual sign: for max, <= rows carry y >= 0 and >= rows y <= 0; reversed for min
            orientation = 1 if maximize else -1
            if con.sense == "<=" and orientation * y[i] < 0 or con.sense == ">=" and orientation * y[i] > 0:
                problems.append(f"dual y[{i}] = {y[i]} has the wrong sign")
            if y[i] != 0 and slack != 0:
                problems.append(f"row {i} is slack but carries dual {y[i]}")

        for j in range(lp.width):
            reduced = sum(con.row[j] * y[i] for i, con in enumerate(lp.constraints)) - lp.objective[j]
            if not lp.nonneg[j]:
                if reduced != 0:
                    problems.append(f"dual constraint for free x[{j}] is not an equality")
            else:
                if (maximize and reduced < 0) or (not maximize and reduced > 0):
                    problems.append(f"dual constraint for x[{j}] violated")
                if x[j] != 0 and reduced != 0:
                    problems.append(f"x[{j}] > 0 with a slack dual constraint")

        if sum(con.rhs * y[i] for i, con in enumerate(lp.constraints)) != self.objective:
            problems.append("dual objective differs from primal objective")

        if problems:
            for problem in problems:
                logger.error(f"LP certificate check failed: {problem}")
            raise SolverError(f"LP certificate check failed: {problems[0]}")


def dump_lp(lp: RationalLP, path: str | Path | None = None) -> str:
    """One constraint per line, coefficients as num/den."""
    lines = [f"{lp.sense} " + " ".join(format_rational(c) for c in lp.objective)]
    lines.append("nonneg " + " ".join("1" if flag else "0" for flag in lp.nonneg))
    for con in lp.constraints:
        lines.append(" ".join(format_rational(a) for a in con.row) + f" {con.sense} {format_rational(con.rhs)}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text

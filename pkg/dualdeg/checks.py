"""
Check results produced by every verifier. A failed check is data, never an exception.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Union

from dualdeg.numeric import format_rational

Value = Union[int, bool, str, Fraction, None]


def render(value: Value):
    """JSON-ready form: rationals become ``p/q`` strings."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return value


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    passed: bool
    measured: Value = None
    expected: Value = None
    tolerance: Value = None
    ref: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "paper_ref": self.ref or self.name,
            "claim": self.claim,
            "pass": bool(self.passed),
            "measured": render(self.measured),
            "expected": render(self.expected),
            "tolerance": render(self.tolerance),
        }


@dataclass
class VerificationReport:
    """
    Checks about one subject. `scope` names the operation that filed them;
    each check's reference anchor is ``<scope>.<name>`` and survives `extend`.
    """

    subject: str
    checks: list[CheckResult] = field(default_factory=list)
    scope: str = ""

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, claim: str, passed: bool, measured: Value = None,
            expected: Value = None, tolerance: Value = None) -> CheckResult:
        check = CheckResult(name=name, claim=claim, passed=bool(passed), measured=measured,
                            expected=expected, tolerance=tolerance,
                            ref=f"{self.scope}.{name}" if self.scope else name)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport | Iterable[CheckResult]", prefix: str = "") -> None:
        checks = other.checks if isinstance(other, VerificationReport) else other
        for check in checks:
            self.checks.append(replace(check, name=prefix + check.name, ref=check.ref or check.name))

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> CheckResult:
        return next(check for check in self.checks if check.name == name)

from dataclasses import dataclass
from logging import Logger
from pathlib import Path

from dualdeg.boolfn.boolfn import BoolFn, from_callable, weight
from dualdeg.errors import PreconditionError
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


@dataclass(frozen=True)
class SymmetricProfile:
    """F(i) for i = |x| = 0..n."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n + 1:
            raise PreconditionError(f"profile of length {len(self.values)} does not match arity {self.n}")
        if any(value not in (1, -1) for value in self.values):
            raise PreconditionError("profile entries must be +1 or -1")

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def threshold_profile(n: int, t: int) -> SymmetricProfile:
    """τ_t: −1 exactly when |x| ≥ t."""
    if not 0 <= t <= n + 1:
        raise PreconditionError(f"threshold {t} out of range for n={n}")
    return SymmetricProfile(n=n, values=tuple(-1 if i >= t else 1 for i in range(n + 1)))


def is_symmetric(f: BoolFn) -> bool:
    seen: dict[int, int] = {}
    for index, value in enumerate(f.table):
        if seen.setdefault(weight(index), value) != value:
            return False
    return True


def to_profile(f: BoolFn) -> SymmetricProfile:
    values = [0] * (f.n + 1)
    for index, value in enumerate(f.table):
        w = weight(index)
        if values[w] == 0:
            values[w] = value
        elif values[w] != value:
            logger.error(f"{f.label} is not symmetric (weight {w} takes both values)")
            raise PreconditionError(f"{f.label} is not symmetric")
    return SymmetricProfile(n=f.n, values=tuple(values))


def from_profile(profile: SymmetricProfile) -> BoolFn:
    return from_callable(profile.n, lambda index: profile.values[weight(index)])


def reflect_profile(profile: SymmetricProfile) -> SymmetricProfile:
    """i ↦ F(n − i), the profile of x ↦ f(−x)."""
    return SymmetricProfile(n=profile.n, values=tuple(reversed(profile.values)))


def jumps(profile: SymmetricProfile) -> list[int]:
    """All t in 1..n with F(t−1) ≠ F(t)."""
    return [t for t in range(1, profile.n + 1) if profile.values[t - 1] != profile.values[t]]


def gamma(profile: SymmetricProfile) -> tuple[int, list[int]]:
    """Paturi's Γ = min over jumps t of |2t − n − 1|, with the jump set."""
    jump_set = jumps(profile)
    if not jump_set:
        logger.error("gamma of a constant profile requested")
        raise PreconditionError("gamma is undefined for a constant profile")
    return min(abs(2 * t - profile.n - 1) for t in jump_set), jump_set


def write_profile(profile: SymmetricProfile, path: str | Path) -> None:
    Path(path).write_text(f"n={profile.n}\n{' '.join(str(v) for v in profile.values)}\n", encoding="utf-8")


def read_profile(path: str | Path) -> SymmetricProfile:
    lines = [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    if len(lines) < 2 or not lines[0].startswith("n="):
        logger.error(f"Malformed profile file '{path}'")
        raise PreconditionError(f"malformed profile file '{path}'")
    return SymmetricProfile(n=int(lines[0][2:]), values=tuple(int(v) for v in lines[1].split()))
